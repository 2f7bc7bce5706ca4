#include <homcore/mountains.hh>
#include <homcore/core.hh>

#include <algorithm>

namespace homcore {

bool is_strictly_decreasing(const MountainSeq & s)
{
    for (std::size_t i = 1; i < s.peaks.size(); ++i)
        if (s.peaks[i] >= s.peaks[i - 1])
            return false;
    return true;
}

PathWord mountain_from_sequence(const MountainSeq & s)
{
    for (int p : s.peaks)
        if (p < 1 || p > s.k)
            throw ValidationError{"peak " + std::to_string(p) + " outside [1, " +
                std::to_string(s.k) + "]"};

    PathWord w;
    w.k = s.k + 2;
    for (int p : s.peaks) {
        w.letters.insert(w.letters.end(), p, Letter::up);
        w.letters.insert(w.letters.end(), p, Letter::down);
    }
    w.letters.insert(w.letters.end(), s.k, Letter::up);
    validate_path_word(w);
    return w;
}

int mountain_vertex_count(const MountainSeq & s)
{
    int sum = 0;
    for (int p : s.peaks)
        sum += p;
    return 2 * sum + s.k + 3;
}

bool seq_homomorphic(const MountainSeq & l, const MountainSeq & r)
{
    if (l.k != r.k)
        throw ValidationError{"sequences have different height bounds"};
    const auto & ls = l.peaks;
    const auto & rs = r.peaks;
    const std::size_t p = ls.size(), q = rs.size();
    if (q == 0)
        return true; // everything folds into a bare ascent
    if (p < q)
        return false;

    // matched[i]: the current prefix of r can be matched with its last
    // element at position i of l.
    std::vector<char> matched(p, 0);
    {
        int prefix_max = 0;
        for (std::size_t i = 0; i < p; ++i) {
            prefix_max = std::max(prefix_max, ls[i]);
            if (ls[i] == rs[0] && prefix_max <= rs[0])
                matched[i] = 1;
        }
    }
    for (std::size_t j = 1; j < q; ++j) {
        std::vector<char> next(p, 0);
        const int bound = std::max(rs[j - 1], rs[j]);
        for (std::size_t i = 0; i < p; ++i) {
            if (! matched[i])
                continue;
            int run_max = 0;
            for (std::size_t i2 = i + 1; i2 < p; ++i2) {
                run_max = std::max(run_max, ls[i2]);
                if (run_max > bound)
                    break;
                if (ls[i2] == rs[j])
                    next[i2] = 1;
            }
        }
        matched = std::move(next);
    }
    return std::find(matched.begin(), matched.end(), char{1}) != matched.end();
}

std::vector<MountainSeq> gen_decreasing_mountains(int h, int l, MountainGenMode mode)
{
    if (l < 0)
        throw ValidationError{"peak count must be nonnegative"};
    if (h <= l + 2)
        throw ValidationError{"need h > l + 2"};
    const int k = h - 2;

    std::vector<MountainSeq> result;
    if (l == 0) {
        result.push_back(MountainSeq{k, {}});
        return result;
    }

    std::vector<int> current;
    auto rec = [&](auto && self, int next_max) -> void {
        if (static_cast<int>(current.size()) == l) {
            result.push_back(MountainSeq{k, current});
            return;
        }
        for (int v = next_max; v >= 1; --v) {
            current.push_back(v);
            self(self, v - 1);
            current.pop_back();
        }
    };

    if (mode == MountainGenMode::fixed_first) {
        current.push_back(k);
        rec(rec, k - 1);
    }
    else {
        rec(rec, k);
    }
    return result;
}

OmegaResult omega_sequence(const MountainSeq & d, const std::vector<MountainSeq> & family)
{
    if (d.peaks.empty())
        throw ValidationError{"separator needs at least one peak"};
    if (! is_strictly_decreasing(d))
        throw ValidationError{"sequence is not strictly decreasing"};
    if (d.peaks.front() != d.k)
        throw ValidationError{"first peak must equal the height parameter"};
    if (std::find(family.begin(), family.end(), d) == family.end())
        throw ValidationError{"sequence is not a member of the family"};
    for (const MountainSeq & m : family)
        if (m.k != d.k)
            throw ValidationError{"family members have different height bounds"};

    OmegaResult result;
    result.omega.k = d.k;
    const auto & peaks = d.peaks;
    if (peaks.size() == 1) {
        result.omega.peaks = peaks;
        result.degenerate = true;
        return result;
    }
    for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
        result.omega.peaks.push_back(peaks[i]);
        for (int v = peaks[i] - 1; v >= 1; --v)
            if (v != peaks[i + 1])
                result.omega.peaks.push_back(v);
    }
    return result;
}

MountainFamilyReport verify_mountain_family(int h, int l, const SearchOptions & options,
    std::size_t max_product_vertices)
{
    MountainFamilyReport report;
    report.h = h;
    report.l = l;
    report.family = gen_decreasing_mountains(h, l, MountainGenMode::fixed_first);
    report.count_fixed_first = report.family.size();
    report.count_all_decreasing = gen_decreasing_mountains(h, l, MountainGenMode::all_decreasing).size();

    std::vector<Digraph> expansions;
    for (const MountainSeq & m : report.family)
        expansions.push_back(path_from_word(mountain_from_sequence(m)));

    report.all_members_cores = Tri::yes;
    for (const Digraph & g : expansions)
        report.all_members_cores = tri_and(report.all_members_cores,
            is_core(g, options, &report.stats));

    Tri overall = report.all_members_cores;
    for (std::size_t di = 0; di < report.family.size(); ++di) {
        OmegaCheck check;
        check.d = report.family[di];
        OmegaResult om = omega_sequence(check.d, report.family);
        check.omega = om.omega;
        check.degenerate = om.degenerate;

        // Separator verdicts, once by the sequence criterion and once by
        // plain homomorphism search on the expansions.
        bool seq_ok = ! seq_homomorphic(check.omega, check.d);
        Digraph omega_path = path_from_word(mountain_from_sequence(check.omega));
        HomResult to_d = find_homomorphism(omega_path, expansions[di], {}, options);
        report.stats.absorb(to_d.stats);
        Tri engine_ok = to_d.found == Tri::no    ? Tri::yes
            : to_d.found == Tri::yes             ? Tri::no
                                                 : Tri::unknown;
        for (std::size_t oi = 0; oi < report.family.size(); ++oi) {
            if (oi == di)
                continue;
            seq_ok = seq_ok && seq_homomorphic(check.omega, report.family[oi]);
            HomResult to_other = find_homomorphism(omega_path, expansions[oi], {}, options);
            report.stats.absorb(to_other.stats);
            engine_ok = tri_and(engine_ok, to_other.found);
        }
        check.seq_route_ok = seq_ok;
        check.engine_route_ok = engine_ok;

        if (report.family.size() == 1) {
            check.product_independent = Tri::no; // nothing to separate from
        }
        else {
            std::vector<const Digraph *> others;
            for (std::size_t oi = 0; oi < report.family.size(); ++oi)
                if (oi != di)
                    others.push_back(&expansions[oi]);
            ProductResult prod = tensor_product_family(others, max_product_vertices);
            HomResult indep = find_homomorphism(prod.product, expansions[di], {}, options);
            report.stats.absorb(indep.stats);
            check.product_independent = indep.found == Tri::no ? Tri::yes
                : indep.found == Tri::yes                      ? Tri::no
                                                               : Tri::unknown;
        }

        overall = tri_and(overall, check.seq_route_ok ? Tri::yes : Tri::no);
        overall = tri_and(overall, check.engine_route_ok);
        overall = tri_and(overall, check.product_independent);
        report.members.push_back(std::move(check));
    }
    report.overall = overall;
    return report;
}

}
