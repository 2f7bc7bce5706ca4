#include <doctest.h>

#include <homcore/core.hh>

#include "oracle.hh"

#include <numeric>

using namespace homcore;

TEST_CASE("directed cycles and single vertices are cores")
{
    CHECK(is_core(make_directed_cycle(5)) == Tri::yes);
    CHECK(is_core(make_directed_cycle(3)) == Tri::yes);
    CHECK(is_core(make_single_vertex()) == Tri::yes);
    CHECK(is_core(make_directed_path(3)) == Tri::yes);
}

TEST_CASE("a chain of two digons folds")
{
    Digraph g = Digraph::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    CHECK(is_core(g) == Tri::no);
    CoreResult c = compute_core(g);
    CHECK(c.certified);
    CHECK(c.core.size() == 2);
    CHECK(c.core == make_directed_cycle(2));
    CHECK(c.retraction.is_idempotent());
    CHECK(c.retraction.is_homomorphism(g, g));
}

TEST_CASE("core of a cycle union folds onto the divisor cycle")
{
    Digraph g = make_directed_cycle(3).disjoint_union(make_directed_cycle(6));
    CoreResult c = compute_core(g);
    CHECK(c.certified);
    CHECK(c.core.size() == 3);
    CHECK(oracle::isomorphic(c.core, make_directed_cycle(3)));
    CHECK(is_core(c.core) == Tri::yes);
}

TEST_CASE("core is idempotent and passes is_core")
{
    for (const Digraph & g : {make_directed_cycle(4).disjoint_union(make_directed_cycle(2)),
             tensor_product(make_directed_cycle(2), make_directed_cycle(3)).product,
             Digraph::from_arcs(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}})}) {
        CoreResult c = compute_core(g);
        REQUIRE(c.certified);
        CHECK(is_core(c.core) == Tri::yes);
        CoreResult again = compute_core(c.core);
        CHECK(again.core == c.core);
        CHECK(are_hom_equivalent(g, c.core) == Tri::yes);
    }
}

TEST_CASE("lcm rule for products of directed cycles, spot checks")
{
    auto core_size_of_product = [](std::vector<int> lengths) {
        std::vector<Digraph> cycles;
        for (int n : lengths)
            cycles.push_back(make_directed_cycle(n));
        std::vector<const Digraph *> ptrs;
        for (const Digraph & c : cycles)
            ptrs.push_back(&c);
        ProductResult p = tensor_product_family(ptrs);
        CoreResult c = compute_core(p.product);
        REQUIRE(c.certified);
        return c.core.size();
    };
    CHECK(core_size_of_product({2, 3}) == 6);
    CHECK(core_size_of_product({2, 4}) == 4);
    CHECK(core_size_of_product({3, 5}) == 15);
    CHECK(core_size_of_product({2, 2, 3}) == 6);
}

TEST_CASE("product with itself keeps the core size")
{
    for (const Digraph & g : {make_directed_cycle(3),
             make_directed_cycle(2).disjoint_union(make_directed_cycle(3))}) {
        ProductResult p = tensor_product(g, g);
        CoreResult self = compute_core(p.product);
        CoreResult base = compute_core(g);
        REQUIRE(self.certified);
        REQUIRE(base.certified);
        CHECK(self.core.size() == base.core.size());
    }
}

TEST_CASE("mapping one factor into the other pins the product core")
{
    // g -> h makes the product hom-equivalent to g
    Digraph g = make_directed_cycle(6), h = make_directed_cycle(3);
    ProductResult p = tensor_product(g, h);
    CoreResult c = compute_core(p.product);
    REQUIRE(c.certified);
    CoreResult cg = compute_core(g);
    CHECK(c.core.size() == cg.core.size());
    CHECK(are_hom_equivalent(c.core, cg.core) == Tri::yes);
}

TEST_CASE("surjectivity checks")
{
    Digraph c3 = make_directed_cycle(3), c6 = make_directed_cycle(6);

    SurjectivityResult self = all_homs_to_target_surjective(c3, c3);
    CHECK(self.verdict == Tri::yes);
    CHECK(self.hom_exists);

    CHECK(all_homs_to_target_surjective(c6, c3).verdict == Tri::yes);

    SurjectivityResult doubled =
        all_homs_to_target_surjective(c3.disjoint_union(c3), c3);
    CHECK(doubled.verdict == Tri::yes);

    Digraph loose = c3.disjoint_union(make_single_vertex());
    SurjectivityResult slack = all_homs_to_target_surjective(loose, loose);
    CHECK(slack.verdict == Tri::no);
    REQUIRE(slack.nonsurjective.has_value());
    CHECK(slack.nonsurjective->is_homomorphism(loose, loose));

    // no homomorphism at all: flagged, verdict false
    SurjectivityResult none = all_homs_to_target_surjective(c3, make_directed_cycle(2));
    CHECK(none.verdict == Tri::no);
    CHECK(! none.hom_exists);
}

TEST_CASE("hom equivalence is not symmetric comparability")
{
    Digraph c6 = make_directed_cycle(6), c3 = make_directed_cycle(3);
    CHECK(are_hom_equivalent(c6, c3) == Tri::no); // C3 cannot enter C6
    CHECK(are_hom_equivalent(c3, c3) == Tri::yes);

    Digraph g = make_directed_cycle(4).disjoint_union(make_directed_cycle(2));
    CoreResult c = compute_core(g);
    CHECK(are_hom_equivalent(g, c.core) == Tri::yes);
}

TEST_CASE("budget shortfall leaves compute_core uncertified")
{
    Digraph g = make_directed_cycle(5).disjoint_union(make_directed_cycle(7));
    SearchOptions tiny;
    tiny.max_nodes = 2;
    CoreResult c = compute_core(g, tiny);
    CHECK(! c.certified);
    CHECK(c.stats.budget_exhausted);
    CHECK(is_core(g, tiny) == Tri::unknown);
}
