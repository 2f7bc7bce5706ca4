#include <homcore/core.hh>

namespace homcore {

namespace {

Bitset all_of(int n)
{
    Bitset mask(n);
    mask.set_all();
    return mask;
}

}

Tri is_core(const Digraph & g, const SearchOptions & options, SearchStats * stats)
{
    const Bitset everyone = all_of(g.size());
    SearchStats total;
    Tri verdict = Tri::yes;
    for (int v = 0; v < g.size(); ++v) {
        Bitset smaller = everyone;
        smaller.reset(v);
        HomResult r = find_retract(g, everyone, smaller, options);
        total.absorb(r.stats);
        if (r.found == Tri::yes) {
            verdict = Tri::no;
            break;
        }
        if (r.found == Tri::unknown)
            verdict = Tri::unknown;
    }
    if (stats)
        stats->absorb(total);
    return verdict;
}

CoreResult compute_core(const Digraph & g, const SearchOptions & options)
{
    CoreResult result;
    result.retraction = VertexMap::identity(g.size());

    Bitset alive = all_of(g.size());
    bool all_refuted = true;

    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        all_refuted = true;
        for (int v = 0; v < g.size(); ++v) {
            if (! alive.test(v))
                continue;
            Bitset smaller = alive;
            smaller.reset(v);
            HomResult r = find_retract(g, alive, smaller, options);
            result.stats.absorb(r.stats);
            if (r.found == Tri::unknown) {
                all_refuted = false;
                continue;
            }
            if (r.found == Tri::no)
                continue;

            // Jump straight to the retract's image, which may be much
            // smaller than alive minus v.
            const VertexMap & step = *r.witness;
            std::vector<int> total(g.size());
            Bitset image(g.size());
            for (int x = 0; x < g.size(); ++x) {
                int via = result.retraction.map[x];
                total[x] = step.map[via];
                image.set(total[x]);
            }
            result.retraction = VertexMap{g.size(), g.size(), std::move(total)};
            alive = image;
            shrunk = true;
            break;
        }
    }

    result.certified = all_refuted;
    result.core = g.induced(alive, &result.kept);
    return result;
}

SurjectivityResult all_homs_to_target_surjective(const Digraph & g, const Digraph & h,
    const SearchOptions & options)
{
    SurjectivityResult result;

    HomResult any = find_homomorphism(g, h, {}, options);
    result.stats.absorb(any.stats);
    if (any.found == Tri::no) {
        result.hom_exists = false;
        result.verdict = Tri::no;
        return result;
    }
    if (any.found == Tri::unknown) {
        result.hom_exists = false;
        result.verdict = Tri::unknown;
        return result;
    }
    result.hom_exists = true;

    Tri verdict = Tri::yes;
    for (int v = 0; v < h.size(); ++v) {
        Bitset smaller = all_of(h.size());
        smaller.reset(v);
        HomResult r = find_homomorphism_masked(g, h, smaller, {}, options);
        result.stats.absorb(r.stats);
        if (r.found == Tri::yes) {
            result.nonsurjective = r.witness;
            verdict = Tri::no;
            break;
        }
        if (r.found == Tri::unknown)
            verdict = Tri::unknown;
    }
    result.verdict = verdict;
    return result;
}

Tri are_hom_equivalent(const Digraph & g, const Digraph & h,
    const SearchOptions & options, SearchStats * stats)
{
    SearchStats total;
    HomResult gh = find_homomorphism(g, h, {}, options);
    total.absorb(gh.stats);
    HomResult hg = find_homomorphism(h, g, {}, options);
    total.absorb(hg.stats);
    if (stats)
        stats->absorb(total);
    return tri_and(gh.found, hg.found);
}

}
