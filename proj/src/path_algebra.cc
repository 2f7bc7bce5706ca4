#include <homcore/path_algebra.hh>

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace homcore {

void validate_path_word(const PathWord & w)
{
    if (w.k < 1)
        throw ValidationError{"height bound must be at least 1"};
    if (w.k == 1) {
        if (! w.letters.empty())
            throw ValidationError{"a path of height 1 is a single arc and has no word letters"};
        return;
    }
    if (! w.letters.empty()) {
        if (w.letters.front() != Letter::up)
            throw ValidationError{"first letter must be up"};
        if (w.letters.back() != Letter::up)
            throw ValidationError{"last letter must be up"};
    }
    int h = 1; // after the implicit first arc
    for (Letter l : w.letters) {
        h += l == Letter::up ? 1 : -1;
        if (h < 1 || h > w.k - 1)
            throw ValidationError{"interior height " + std::to_string(h) +
                " leaves the window [1, " + std::to_string(w.k - 1) + "]"};
    }
    if (h != w.k - 1)
        throw ValidationError{"word ends at height " + std::to_string(h) +
            ", expected " + std::to_string(w.k - 1)};
}

int path_vertex_count(const PathWord & w)
{
    return w.k == 1 ? 2 : static_cast<int>(w.letters.size()) + 3;
}

Digraph path_from_word(const PathWord & w)
{
    validate_path_word(w);
    if (w.k == 1)
        return Digraph::from_arcs(2, {{0, 1}});

    const int n = path_vertex_count(w);
    std::vector<Arc> arcs;
    arcs.push_back({0, 1});
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        int a = static_cast<int>(i) + 1;
        if (w.letters[i] == Letter::up)
            arcs.push_back({a, a + 1});
        else
            arcs.push_back({a + 1, a});
    }
    arcs.push_back({n - 2, n - 1});
    return Digraph::from_arcs(n, std::move(arcs));
}

namespace {

// Walk order of an oriented path, or empty if g is not one.
std::vector<int> path_walk_from(const Digraph & g, int anchor)
{
    const int n = g.size();
    std::vector<int> walk{anchor};
    std::vector<char> used(n, 0);
    used[anchor] = 1;
    int at = anchor;
    while (static_cast<int>(walk.size()) < n) {
        int next = -1;
        for (std::size_t y = g.out(at).find_first(); y != Bitset::npos;
             y = g.out(at).find_next_from(y + 1))
            if (! used[y]) {
                if (next >= 0)
                    return {};
                next = static_cast<int>(y);
            }
        for (std::size_t y = g.in(at).find_first(); y != Bitset::npos;
             y = g.in(at).find_next_from(y + 1))
            if (! used[y]) {
                if (next >= 0)
                    return {};
                next = static_cast<int>(y);
            }
        if (next < 0)
            return {};
        used[next] = 1;
        walk.push_back(next);
        at = next;
    }
    return walk;
}

bool is_path_shape(const Digraph & g)
{
    if (! g.is_antisymmetric())
        return false;
    if (g.arc_count() != g.size() - 1)
        return false;
    int endpoints = 0;
    for (int v = 0; v < g.size(); ++v) {
        int d = g.degree(v);
        if (d > 2)
            return false;
        if (d <= 1)
            ++endpoints;
    }
    return g.size() == 1 || endpoints == 2;
}

}

std::vector<int> height_profile(const Digraph & g, int anchor)
{
    if (g.size() == 1) {
        if (anchor != 0)
            throw ValidationError{"anchor out of range"};
        return {0};
    }
    if (anchor < 0 || anchor >= g.size())
        throw ValidationError{"anchor out of range"};
    if (! is_path_shape(g) || g.degree(anchor) != 1)
        throw ValidationError{"input is not an oriented path anchored at an endpoint"};

    std::vector<int> walk = path_walk_from(g, anchor);
    if (walk.empty())
        throw ValidationError{"input is not an oriented path"};

    std::vector<int> profile{0};
    for (std::size_t i = 1; i < walk.size(); ++i) {
        if (g.has_arc(walk[i - 1], walk[i]))
            profile.push_back(profile.back() + 1);
        else
            profile.push_back(profile.back() - 1);
    }
    return profile;
}

PathWord word_from_path(const Digraph & g)
{
    if (! is_path_shape(g) || g.size() < 2)
        throw ValidationError{"input is not an oriented path on at least 2 vertices"};

    for (int anchor = 0; anchor < g.size(); ++anchor) {
        if (g.degree(anchor) != 1)
            continue;
        std::vector<int> profile = height_profile(g, anchor);
        int k = profile.back();
        if (k < 1)
            continue;
        bool bounded = true;
        for (std::size_t i = 1; i + 1 < profile.size(); ++i)
            if (profile[i] < 1 || profile[i] > k - 1) {
                bounded = false;
                break;
            }
        if (! bounded)
            continue;

        PathWord w;
        w.k = k;
        std::vector<int> walk = path_walk_from(g, anchor);
        for (std::size_t i = 2; i + 1 < walk.size(); ++i)
            w.letters.push_back(g.has_arc(walk[i - 1], walk[i]) ? Letter::up : Letter::down);
        validate_path_word(w);
        return w;
    }
    throw ValidationError{"path is not height-bounded from either endpoint"};
}

Tri kb_hom_exists(const PathWord & p, const PathWord & q,
    const SearchOptions & options, SearchStats * stats)
{
    if (p.k != q.k)
        throw ValidationError{"paths have different height bounds"};
    if (p == q)
        return Tri::yes;
    if (path_vertex_count(p) < path_vertex_count(q))
        return Tri::no; // a map can only shrink a bounded path

    Digraph ep = path_from_word(p);
    Digraph eq = path_from_word(q);
    PartialMap pins{{0, 0}, {ep.size() - 1, eq.size() - 1}};
    HomResult r = find_homomorphism(ep, eq, pins, options);
    if (stats)
        stats->absorb(r.stats);
    return r.found;
}

SumOfPaths sum_zero(int k)
{
    return SumOfPaths{k, {}};
}

SumOfPaths sum_unit(int k)
{
    PathWord unit;
    unit.k = k;
    if (k >= 2)
        unit.letters.assign(k - 2, Letter::up);
    return SumOfPaths{k, {unit}};
}

namespace {

bool word_before(const PathWord & a, const PathWord & b)
{
    if (a.letters.size() != b.letters.size())
        return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
}

Tri exact_kb_hom(const PathWord & p, const PathWord & q, const SearchOptions & options)
{
    Tri t = kb_hom_exists(p, q, options);
    if (t == Tri::unknown)
        throw CapacityError{"path comparison ran out of search budget"};
    return t;
}

}

SumOfPaths sum_normalize(int k, std::vector<PathWord> paths, const SearchOptions & options)
{
    for (const PathWord & p : paths) {
        if (p.k != k)
            throw ValidationError{"sum elements must share the height bound"};
        validate_path_word(p);
    }

    std::sort(paths.begin(), paths.end(), word_before);
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

    // Keep the sinks of the hom order: drop P whenever P maps to some other
    // retained Q (anything mapping to P then maps to Q as well).
    std::vector<char> dropped(paths.size(), 0);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = 0; j < paths.size(); ++j) {
            if (i == j || dropped[i])
                continue;
            if (dropped[j])
                continue;
            if (exact_kb_hom(paths[i], paths[j], options) == Tri::yes) {
                dropped[i] = 1;
                break;
            }
        }

    SumOfPaths result;
    result.k = k;
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (! dropped[i])
            result.elements.push_back(std::move(paths[i]));
    return result;
}

SumOfPaths sum_join(const SumOfPaths & a, const SumOfPaths & b, const SearchOptions & options)
{
    if (a.k != b.k)
        throw ValidationError{"sums have different height bounds"};
    std::vector<PathWord> all = a.elements;
    all.insert(all.end(), b.elements.begin(), b.elements.end());
    return sum_normalize(a.k, std::move(all), options);
}

namespace {

// Depth-first enumeration of the bounded paths inside p x q that start at
// (beginning, beginning) and finish at (end, end), as words.  Interior walk
// heights are confined to [1, k-1], which forces both endpoint heights to be
// unique along the walk.
void corner_paths(const PathWord & p, const PathWord & q,
    std::vector<PathWord> & out, std::size_t max_paths)
{
    const int k = p.k;
    Digraph ep = path_from_word(p);
    Digraph eq = path_from_word(q);
    const int np = ep.size(), nq = eq.size();
    const int goal = (np - 1) * nq + (nq - 1);

    std::vector<char> visited(static_cast<std::size_t>(np) * nq, 0);
    std::vector<Letter> steps;

    struct Walker {
        const Digraph & ep;
        const Digraph & eq;
        int nq, k, goal;
        std::vector<char> & visited;
        std::vector<Letter> & steps;
        std::vector<PathWord> & out;
        std::size_t max_paths;

        void go(int i, int j, int h)
        {
            visited[i * nq + j] = 1;
            try_moves(i, j, h, true);
            try_moves(i, j, h, false);
            visited[i * nq + j] = 0;
        }

        void try_moves(int i, int j, int h, bool up)
        {
            const Bitset & pi = up ? ep.out(i) : ep.in(i);
            const Bitset & qj = up ? eq.out(j) : eq.in(j);
            const int nh = h + (up ? 1 : -1);
            for (std::size_t i2 = pi.find_first(); i2 != Bitset::npos;
                 i2 = pi.find_next_from(i2 + 1)) {
                for (std::size_t j2 = qj.find_first(); j2 != Bitset::npos;
                     j2 = qj.find_next_from(j2 + 1)) {
                    const int cell = static_cast<int>(i2) * nq + static_cast<int>(j2);
                    if (visited[cell])
                        continue;
                    steps.push_back(up ? Letter::up : Letter::down);
                    if (cell == goal) {
                        if (nh == k)
                            emit();
                    }
                    else if (nh >= 1 && nh <= k - 1) {
                        go(static_cast<int>(i2), static_cast<int>(j2), nh);
                    }
                    steps.pop_back();
                }
            }
        }

        void emit()
        {
            if (out.size() >= max_paths)
                throw CapacityError{"corner-to-corner path enumeration exceeded the cap of " +
                    std::to_string(max_paths)};
            PathWord w;
            w.k = k;
            if (k >= 2)
                w.letters.assign(steps.begin() + 1, steps.end() - 1);
            validate_path_word(w);
            out.push_back(std::move(w));
        }
    };

    Walker walker{ep, eq, nq, k, goal, visited, steps, out, max_paths};
    walker.go(0, 0, 0);
}

}

SumOfPaths sum_meet(const SumOfPaths & a, const SumOfPaths & b,
    const SearchOptions & options, std::size_t max_paths)
{
    if (a.k != b.k)
        throw ValidationError{"sums have different height bounds"};
    std::vector<PathWord> found;
    for (const PathWord & p : a.elements)
        for (const PathWord & q : b.elements)
            corner_paths(p, q, found, max_paths);
    return sum_normalize(a.k, std::move(found), options);
}

int min_order(const SumOfPaths & a)
{
    if (a.empty())
        throw ValidationError{"min-order of the empty sum is undefined"};
    int best = path_vertex_count(a.elements.front());
    for (const PathWord & p : a.elements)
        best = std::min(best, path_vertex_count(p));
    return best;
}

Digraph expand_sum(const SumOfPaths & a)
{
    Digraph acc = Digraph::from_arcs(0, {});
    for (const PathWord & p : a.elements)
        acc = acc.disjoint_union(path_from_word(p));
    return acc;
}

PathWord parse_word(int k, const std::string & text)
{
    PathWord w;
    w.k = k;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
        if (c != 'u' && c != 'd')
            throw ValidationError{"bad word token \"" + token + "\""};
        int count = 1;
        if (token.size() > 1) {
            try {
                std::size_t used = 0;
                count = std::stoi(token.substr(1), &used);
                if (used + 1 != token.size() || count < 1)
                    throw std::invalid_argument{""};
            }
            catch (const std::exception &) {
                throw ValidationError{"bad word token \"" + token + "\""};
            }
        }
        for (int i = 0; i < count; ++i)
            w.letters.push_back(c == 'u' ? Letter::up : Letter::down);
    }
    validate_path_word(w);
    return w;
}

std::string format_word(const PathWord & w)
{
    std::string out;
    for (Letter l : w.letters) {
        if (! out.empty())
            out += ' ';
        out += l == Letter::up ? 'U' : 'D';
    }
    return out;
}

PathWord random_path_word(std::mt19937_64 & rng, int k, int max_letters)
{
    PathWord w;
    w.k = k;
    if (k <= 2) {
        validate_path_word(w);
        return w;
    }

    // Feasible lengths share the parity of k and start at k - 2.
    std::vector<int> lengths;
    for (int len = k - 2; len <= max_letters; len += 2)
        lengths.push_back(len);
    if (lengths.empty())
        throw ValidationError{"max_letters too small for this height bound"};
    const int len = lengths[std::uniform_int_distribution<std::size_t>(0, lengths.size() - 1)(rng)];

    int h = 1;
    for (int t = 0; t < len; ++t) {
        const int remaining = len - t - 1;
        auto feasible = [&](int nh) {
            if (nh < 1 || nh > k - 1)
                return false;
            int gap = std::abs((k - 1) - nh);
            return gap <= remaining && (remaining - gap) % 2 == 0;
        };
        const bool can_up = feasible(h + 1);
        const bool can_down = feasible(h - 1);
        bool up = can_up && (! can_down || std::uniform_int_distribution<int>(0, 1)(rng) == 0);
        w.letters.push_back(up ? Letter::up : Letter::down);
        h += up ? 1 : -1;
    }
    validate_path_word(w);
    return w;
}

std::vector<PathWord> enumerate_path_words(int k, int max_letters)
{
    std::vector<PathWord> result;
    if (k < 1)
        return result;
    if (k <= 2) {
        result.push_back(PathWord{k, {}});
        return result;
    }

    std::vector<Letter> current;
    auto rec = [&](auto && self, int h) -> void {
        if (h == k - 1 && ! current.empty() && current.back() == Letter::up) {
            result.push_back(PathWord{k, current});
        }
        if (static_cast<int>(current.size()) == max_letters)
            return;
        if (h + 1 <= k - 1) {
            current.push_back(Letter::up);
            self(self, h + 1);
            current.pop_back();
        }
        if (h - 1 >= 1 && ! current.empty()) {
            current.push_back(Letter::down);
            self(self, h - 1);
            current.pop_back();
        }
    };
    rec(rec, 1);
    for (const PathWord & w : result)
        validate_path_word(w);
    return result;
}

LatticeLawReport check_lattice_laws(std::uint64_t seed, int k, int trials,
    int max_letters, const SearchOptions & options, std::size_t max_paths)
{
    LatticeLawReport report;
    report.trials = trials;
    std::mt19937_64 rng(seed);

    auto random_sum = [&]() {
        std::vector<PathWord> elements;
        const int count = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < count; ++i)
            elements.push_back(random_path_word(rng, k, max_letters));
        return sum_normalize(k, std::move(elements), options);
    };

    const SumOfPaths zero = sum_zero(k);
    const SumOfPaths unit = sum_unit(k);

    for (int trial = 0; trial < trials; ++trial) {
        SumOfPaths a = random_sum(), b = random_sum(), c = random_sum();
        auto meet = [&](const SumOfPaths & x, const SumOfPaths & y) {
            return sum_meet(x, y, options, max_paths);
        };
        auto join = [&](const SumOfPaths & x, const SumOfPaths & y) {
            return sum_join(x, y, options);
        };
        auto expect = [&](bool ok) {
            ++report.law_checks;
            if (! ok)
                ++report.failures;
        };

        expect(join(a, b) == join(b, a));
        expect(meet(a, b) == meet(b, a));
        expect(join(join(a, b), c) == join(a, join(b, c)));
        expect(meet(meet(a, b), c) == meet(a, meet(b, c)));
        expect(join(a, meet(a, b)) == a);
        expect(meet(a, join(a, b)) == a);
        expect(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
        expect(join(a, meet(b, c)) == meet(join(a, b), join(a, c)));
        expect(join(a, zero) == a);
        expect(meet(a, unit) == a);
        expect(join(a, unit) == unit);
        expect(meet(a, zero) == zero);
    }
    report.overall = report.failures == 0 ? Tri::yes : Tri::no;
    return report;
}

}
