#include <doctest.h>

#include <homcore/core.hh>
#include <homcore/path_algebra.hh>

#include "oracle.hh"

#include <random>

using namespace homcore;

namespace {

PathWord word_of(int k, const std::string & text)
{
    return parse_word(k, text);
}

Digraph permuted(const Digraph & g, const std::vector<int> & perm)
{
    std::vector<Arc> arcs;
    for (const Arc & a : g.arcs())
        arcs.push_back({perm[a.from], perm[a.to]});
    return Digraph::from_arcs(g.size(), std::move(arcs));
}

}

TEST_CASE("word validation")
{
    CHECK_NOTHROW(validate_path_word(word_of(4, "U D U U D D U U")));
    CHECK_THROWS_AS(word_of(3, "D U U"), ValidationError);     // must open upward
    CHECK_THROWS_AS(word_of(3, "U U D"), ValidationError);     // must close upward
    CHECK_THROWS_AS(word_of(3, "U U U"), ValidationError);     // leaves the window
    CHECK_THROWS_AS(word_of(2, "U D U"), ValidationError);     // k=2 admits only the bare path
    CHECK_THROWS_AS((PathWord{1, {Letter::up}}, validate_path_word(PathWord{1, {Letter::up}})),
        ValidationError);
    CHECK_NOTHROW(validate_path_word(PathWord{1, {}}));
    CHECK_NOTHROW(validate_path_word(PathWord{2, {}}));
}

TEST_CASE("compressed and plain word literals agree")
{
    CHECK(word_of(4, "U D U U D D U U") == word_of(4, "u1 d1 u2 d2 u2"));
    CHECK(format_word(word_of(4, "u1 d1 u2 d2 u2")) == "U D U U D D U U");
    CHECK_THROWS_AS(word_of(4, "U x"), ValidationError);
    CHECK_THROWS_AS(word_of(4, "u0"), ValidationError);
}

TEST_CASE("expansion shapes")
{
    // the 8-letter example word expands to an 11-vertex path of height 4
    Digraph p = path_from_word(word_of(4, "U D U U D D U U"));
    CHECK(p.size() == 11);
    CHECK(p.arc_count() == 10);
    std::vector<int> profile = height_profile(p, 0);
    CHECK(profile == std::vector<int>{0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 4});

    CHECK(path_from_word(PathWord{1, {}}) == make_directed_path(2));
    CHECK(path_from_word(PathWord{2, {}}) == make_directed_path(3));
}

TEST_CASE("height profile of simple paths")
{
    CHECK(height_profile(make_directed_path(4), 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(height_profile(make_single_vertex(), 0) == std::vector<int>{0});
    CHECK_THROWS_AS(height_profile(make_directed_cycle(3), 0), ValidationError);
    CHECK_THROWS_AS(height_profile(make_directed_path(4), 1), ValidationError); // not an endpoint
}

TEST_CASE("word round-trips survive relabelling")
{
    std::mt19937_64 rng(99);
    for (int k = 1; k <= 5; ++k)
        for (int trial = 0; trial < 20; ++trial) {
            PathWord w = random_path_word(rng, k, 8);
            Digraph p = path_from_word(w);
            CHECK(word_from_path(p) == w);

            std::vector<int> perm(p.size());
            for (int i = 0; i < p.size(); ++i)
                perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(word_from_path(permuted(p, perm)) == w);
        }
}

TEST_CASE("word enumeration matches hand counts")
{
    CHECK(enumerate_path_words(1, 9).size() == 1);
    CHECK(enumerate_path_words(2, 9).size() == 1);
    CHECK(enumerate_path_words(3, 9).size() == 5); // alternations of odd length
    CHECK(enumerate_path_words(4, 4).size() == 3); // UU, UUDU, UDUU
    for (const PathWord & w : enumerate_path_words(5, 9))
        CHECK_NOTHROW(validate_path_word(w));
}

TEST_CASE("bounded-path homomorphisms against the engine-free oracle")
{
    // identity, the size obstruction, and a genuine fold
    PathWord m21 = word_of(4, "u2 d2 u1 d1 u2");
    PathWord m2 = word_of(4, "u2 d2 u2");
    CHECK(kb_hom_exists(m21, m21) == Tri::yes);
    CHECK(kb_hom_exists(m2, m21) == Tri::no); // smaller cannot reach bigger
    CHECK(kb_hom_exists(m21, m2) == Tri::yes);
    CHECK(oracle::hom_exists(path_from_word(m21), path_from_word(m2)));

    CHECK_THROWS_AS(kb_hom_exists(m21, PathWord{3, {Letter::up}}), ValidationError);
}

TEST_CASE("found path homomorphisms preserve height and endpoints")
{
    std::mt19937_64 rng(4242);
    int found = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int k = 3 + static_cast<int>(rng() % 2);
        PathWord p = random_path_word(rng, k, 9);
        PathWord q = random_path_word(rng, k, 7);
        Digraph ep = path_from_word(p), eq = path_from_word(q);
        HomResult r = find_homomorphism(ep, eq);
        REQUIRE(r.found != Tri::unknown);
        CHECK((r.found == Tri::yes) == oracle::hom_exists(ep, eq));
        if (r.found != Tri::yes)
            continue;
        ++found;
        std::vector<int> hp = height_profile(ep, 0), hq = height_profile(eq, 0);
        const VertexMap & phi = *r.witness;
        for (int v = 0; v < ep.size(); ++v)
            CHECK(hp[v] == hq[phi.map[v]]);
        CHECK(phi.map[0] == 0);
        CHECK(phi.map[ep.size() - 1] == eq.size() - 1);
        // surjectivity
        CHECK(static_cast<int>(phi.image().count()) == eq.size());
    }
    CHECK(found > 5);
}

TEST_CASE("endpoint pinning agrees with the unpinned engine")
{
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 80; ++trial) {
        const int k = 3 + static_cast<int>(rng() % 3);
        PathWord p = random_path_word(rng, k, 9);
        PathWord q = random_path_word(rng, k, 7);
        Tri pinned = kb_hom_exists(p, q);
        HomResult free_search = find_homomorphism(path_from_word(p), path_from_word(q));
        CHECK(pinned == free_search.found);
    }
}

TEST_CASE("every bounded path is a core")
{
    for (int k = 1; k <= 4; ++k)
        for (const PathWord & w : enumerate_path_words(k, 6))
            CHECK(is_core(path_from_word(w)) == Tri::yes);
}

TEST_CASE("sum normalization keeps hom targets")
{
    PathWord m21 = word_of(4, "u2 d2 u1 d1 u2");
    PathWord m2 = word_of(4, "u2 d2 u2");
    SumOfPaths s = sum_normalize(4, {m21, m2});
    REQUIRE(s.elements.size() == 1);
    CHECK(s.elements[0] == m2);

    SumOfPaths single = sum_normalize(4, {m21});
    CHECK(single.elements.size() == 1);

    CHECK(sum_normalize(4, {}).empty());
    CHECK(sum_normalize(4, {m2, m2}).elements.size() == 1);

    // normalization keeps the hom class of the disjoint union
    Digraph before = path_from_word(m21).disjoint_union(path_from_word(m2));
    CHECK(are_hom_equivalent(before, expand_sum(s)) == Tri::yes);
}

TEST_CASE("join identities")
{
    PathWord a = word_of(5, "u3 d2 u2");
    PathWord b = word_of(5, "u2 d1 u1 d2 u3");
    SumOfPaths sa = sum_normalize(5, {a}), sb = sum_normalize(5, {b});

    CHECK(sum_join(sa, sum_zero(5)) == sa);
    CHECK(sum_join(sa, sa) == sa);
    CHECK(sum_join(sa, sb) == sum_join(sb, sa));
    CHECK(sum_join(sa, sum_unit(5)) == sum_unit(5)); // everything maps to the bare ascent
}

TEST_CASE("incomparable mountains both survive the join")
{
    PathWord m31 = word_of(5, "u3 d3 u1 d1 u3");
    PathWord m32 = word_of(5, "u3 d3 u2 d2 u3");
    SumOfPaths joined = sum_join(sum_normalize(5, {m31}), sum_normalize(5, {m32}));
    CHECK(joined.elements.size() == 2);
}

TEST_CASE("meet against the defining law")
{
    // X maps to (A meet B) exactly when it maps to both A and B.
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        const int k = 3 + static_cast<int>(rng() % 2);
        SumOfPaths a = sum_normalize(k, {random_path_word(rng, k, 7), random_path_word(rng, k, 5)});
        SumOfPaths b = sum_normalize(k, {random_path_word(rng, k, 7)});
        SumOfPaths meet = sum_meet(a, b);

        Digraph ea = expand_sum(a), eb = expand_sum(b), em = expand_sum(meet);
        for (int probe = 0; probe < 4; ++probe) {
            Digraph x = path_from_word(random_path_word(rng, k, 7));
            bool to_a = find_homomorphism(x, ea).found == Tri::yes;
            bool to_b = find_homomorphism(x, eb).found == Tri::yes;
            bool to_m = find_homomorphism(x, em).found == Tri::yes;
            CHECK(to_m == (to_a && to_b));
        }
        // and the meet itself reaches both sides
        if (! meet.empty()) {
            CHECK(find_homomorphism(em, ea).found == Tri::yes);
            CHECK(find_homomorphism(em, eb).found == Tri::yes);
        }
    }
}

TEST_CASE("meet identities")
{
    PathWord a1 = word_of(4, "u2 d2 u1 d1 u2");
    PathWord a2 = word_of(4, "u2 d1 u1 d2 u2");
    SumOfPaths a = sum_normalize(4, {a1, a2});
    CHECK(sum_meet(a, sum_unit(4)) == a);
    CHECK(sum_meet(a, a) == a);
    CHECK(sum_meet(a, sum_zero(4)).empty());
    CHECK(sum_meet(a, sum_normalize(4, {a1})) == sum_normalize(4, {a1}));
}

TEST_CASE("min order")
{
    PathWord m31 = word_of(5, "u3 d3 u1 d1 u3");
    PathWord m32 = word_of(5, "u3 d3 u2 d2 u3");
    CHECK(min_order(sum_normalize(5, {m31})) == 14);
    CHECK(min_order(sum_normalize(5, {m31, m32})) == 14);
    CHECK_THROWS_AS(min_order(sum_zero(5)), ValidationError);

    // meet components never outgrow the tensor product
    SumOfPaths meet = sum_meet(sum_normalize(5, {m31}), sum_normalize(5, {m32}));
    if (! meet.empty())
        CHECK(min_order(meet) <= 14 * 16);
}

TEST_CASE("min order is monotone along homomorphisms")
{
    std::mt19937_64 rng(31337);
    int hits = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 3 + static_cast<int>(rng() % 2);
        SumOfPaths a = sum_normalize(k, {random_path_word(rng, k, 8)});
        SumOfPaths b = sum_normalize(k, {random_path_word(rng, k, 6), random_path_word(rng, k, 4)});
        if (find_homomorphism(expand_sum(a), expand_sum(b)).found == Tri::yes) {
            ++hits;
            CHECK(min_order(b) <= min_order(a));
        }
    }
    CHECK(hits > 0);
}

TEST_CASE("sum homomorphisms decompose elementwise")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 3 + static_cast<int>(rng() % 2);
        SumOfPaths a = sum_normalize(k,
            {random_path_word(rng, k, 7), random_path_word(rng, k, 5)});
        SumOfPaths b = sum_normalize(k,
            {random_path_word(rng, k, 7), random_path_word(rng, k, 5)});
        bool whole = find_homomorphism(expand_sum(a), expand_sum(b)).found == Tri::yes;
        bool elementwise = true;
        for (const PathWord & p : a.elements) {
            bool some = false;
            for (const PathWord & q : b.elements)
                if (kb_hom_exists(p, q) == Tri::yes) {
                    some = true;
                    break;
                }
            elementwise = elementwise && some;
        }
        CHECK(whole == elementwise);
    }
}

TEST_CASE("a bounded path into G rules out the dual directed path")
{
    for (const Digraph & g : {make_directed_cycle(3),
             make_directed_cycle(2).disjoint_union(make_directed_cycle(3))})
        for (int k = 2; k <= 4; ++k)
            for (const PathWord & w : enumerate_path_words(k, 6)) {
                if (find_homomorphism(path_from_word(w), g).found != Tri::yes)
                    continue;
                CHECK(find_homomorphism(g, make_directed_path(k)).found == Tri::no);
            }
}

TEST_CASE("meet enumeration cap reports capacity, not a wrong answer")
{
    PathWord a = word_of(4, "u2 d2 u1 d1 u2 d2 u1 d1 u2");
    SumOfPaths s = sum_normalize(4, {a});
    CHECK_THROWS_AS(sum_meet(s, s, {}, 1), CapacityError);
}
