#include <homcore/cone_orth.hh>

#include <algorithm>

namespace homcore {

ConedDigraph cone(const Digraph & base)
{
    const int n = base.size();
    std::vector<Arc> arcs = base.arcs();
    for (int v = 0; v < n; ++v) {
        arcs.push_back({n, v});
        arcs.push_back({v, n});
    }
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v)
        labels.push_back(base.display_label(v));
    labels.push_back("apex");
    ConedDigraph result;
    result.graph = Digraph::from_arcs(n + 1, std::move(arcs), std::move(labels));
    result.apex = n;
    return result;
}

OrthogonalityReport are_orthogonal(const Digraph & g, const Digraph & h,
    const SearchOptions & options, std::size_t max_vertices)
{
    OrthogonalityReport report;
    ProductResult prod = tensor_product(g, h, max_vertices);
    report.product_size = prod.product.size();
    report.onto_left = all_homs_to_target_surjective(prod.product, g, options);
    report.onto_right = all_homs_to_target_surjective(prod.product, h, options);
    report.verdict = tri_and(report.onto_left.verdict, report.onto_right.verdict);
    return report;
}

namespace {

Bitset full_mask(int n)
{
    Bitset mask(n);
    mask.set_all();
    return mask;
}

// Inclusion-minimal induced subgraph of `factor` that `product` maps into.
// Jumps to the image of each found homomorphism, then certifies minimality
// vertex by vertex.
Bitset descend_factor(const Digraph & product, const Digraph & factor,
    const SearchOptions & options, SearchStats & stats, bool & certified)
{
    Bitset mask = full_mask(factor.size());

    HomResult first = find_homomorphism(product, factor, {}, options);
    stats.absorb(first.stats);
    if (first.found != Tri::yes) {
        certified = false;
        return mask;
    }
    {
        Bitset image(factor.size());
        for (int v = 0; v < product.size(); ++v)
            image.set(first.witness->map[v]);
        mask = image;
    }

    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int v = 0; v < factor.size(); ++v) {
            if (! mask.test(v))
                continue;
            Bitset smaller = mask;
            smaller.reset(v);
            HomResult r = find_homomorphism_masked(product, factor, smaller, {}, options);
            stats.absorb(r.stats);
            if (r.found == Tri::unknown) {
                certified = false;
                continue;
            }
            if (r.found == Tri::no)
                continue;
            Bitset image(factor.size());
            for (int u = 0; u < product.size(); ++u)
                image.set(r.witness->map[u]);
            mask = image;
            progressed = true;
            break;
        }
    }
    return mask;
}

}

OrthogonalizedPair orthogonalize_pair(const Digraph & g, const Digraph & h,
    const SearchOptions & options, std::size_t max_vertices)
{
    OrthogonalizedPair result;
    result.certified = true;

    ProductResult prod = tensor_product(g, h, max_vertices);
    Bitset gmask = descend_factor(prod.product, g, options, result.stats, result.certified);
    Bitset hmask = descend_factor(prod.product, h, options, result.stats, result.certified);
    result.left = g.induced(gmask, &result.left_kept);
    result.right = h.induced(hmask, &result.right_kept);
    return result;
}

TwoConeReport verify_two_cone_theorem(const Digraph & g, const Digraph & h,
    const SearchOptions & options, std::size_t max_vertices)
{
    TwoConeReport report;
    report.left_oriented = g.is_antisymmetric();
    report.right_oriented = h.is_antisymmetric();

    HomResult gh = find_homomorphism(g, h, {}, options);
    HomResult hg = find_homomorphism(h, g, {}, options);
    report.stats.absorb(gh.stats);
    report.stats.absorb(hg.stats);
    if (gh.found == Tri::yes || hg.found == Tri::yes)
        report.incomparable = Tri::no;
    else if (gh.found == Tri::no && hg.found == Tri::no)
        report.incomparable = Tri::yes;
    else
        report.incomparable = Tri::unknown;

    OrthogonalityReport orth = are_orthogonal(g, h, options, max_vertices);
    report.stats.absorb(orth.onto_left.stats);
    report.stats.absorb(orth.onto_right.stats);
    report.orthogonal = orth.verdict;

    Tri oriented = (report.left_oriented && report.right_oriented) ? Tri::yes : Tri::no;
    report.hypotheses = tri_and(oriented, tri_and(report.incomparable, report.orthogonal));

    if (report.hypotheses != Tri::no) {
        ConedDigraph cg = cone(g);
        ConedDigraph ch = cone(h);
        ProductResult prod = tensor_product(cg.graph, ch.graph, max_vertices);
        report.cone_product_size = prod.product.size();
        report.conclusion_checked = true;
        report.cone_product_is_core = is_core(prod.product, options, &report.stats);
    }

    report.overall = tri_and(report.hypotheses, report.cone_product_is_core);
    return report;
}

VscFamilyReport verify_vsc_conditions(const std::vector<const Digraph *> & family,
    const SearchOptions & options, std::size_t max_vertices,
    std::size_t direct_core_cap, bool use_digon_shortcut)
{
    if (family.empty())
        throw ValidationError{"family must be nonempty"};

    VscFamilyReport report;
    const std::size_t n = family.size();

    Tri preconditions = Tri::yes;
    Tri conditions = Tri::yes;

    ProductResult whole = tensor_product_family(family, max_vertices);
    Digraph digon = make_directed_cycle(2);

    for (std::size_t i = 0; i < n; ++i) {
        VscMemberReport member;
        member.index = static_cast<int>(i);
        member.oriented = family[i]->is_antisymmetric();
        if (! member.oriented)
            preconditions = Tri::no;

        member.member_is_core = is_core(*family[i], options, &member.stats);
        preconditions = tri_and(preconditions, member.member_is_core);

        member.incomparable_with_rest = Tri::yes;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            HomResult r = find_homomorphism(*family[i], *family[j], {}, options);
            member.stats.absorb(r.stats);
            Tri incomparable = r.found == Tri::no ? Tri::yes
                : r.found == Tri::yes             ? Tri::no
                                                  : Tri::unknown;
            member.incomparable_with_rest = tri_and(member.incomparable_with_rest, incomparable);
        }
        preconditions = tri_and(preconditions, member.incomparable_with_rest);

        if (n == 1) {
            member.degenerate = true;
            member.others_do_not_reach_member = Tri::yes;
            member.others_reach_cone = Tri::yes;
        }
        else {
            std::vector<const Digraph *> others;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    others.push_back(family[j]);
            ProductResult rest = tensor_product_family(others, max_vertices);

            HomResult a1 = find_homomorphism(rest.product, *family[i], {}, options);
            member.stats.absorb(a1.stats);
            member.others_do_not_reach_member = a1.found == Tri::no ? Tri::yes
                : a1.found == Tri::yes                              ? Tri::no
                                                                    : Tri::unknown;

            Tri cone_reached = Tri::unknown;
            if (use_digon_shortcut) {
                // The product maps to a digon (hence into any cone) as soon
                // as every factor does.  Only a positive answer is usable;
                // a factor missing the digon proves nothing about the cone.
                Tri all_to_digon = Tri::yes;
                for (const Digraph * other : others) {
                    HomResult r = find_homomorphism(*other, digon, {}, options);
                    member.stats.absorb(r.stats);
                    all_to_digon = tri_and(all_to_digon, r.found);
                }
                if (all_to_digon == Tri::yes)
                    cone_reached = Tri::yes;
            }
            if (cone_reached == Tri::yes) {
                member.others_reach_cone = Tri::yes;
            }
            else {
                ConedDigraph coned = cone(*family[i]);
                HomResult a2 = find_homomorphism(rest.product, coned.graph, {}, options);
                member.stats.absorb(a2.stats);
                member.others_reach_cone = a2.found;
                if (a2.found == Tri::yes)
                    member.cone_witness = a2.witness;
            }
        }

        SurjectivityResult b = all_homs_to_target_surjective(whole.product, *family[i], options);
        member.stats.absorb(b.stats);
        member.product_onto_member = b.verdict;

        conditions = tri_and(conditions, member.others_do_not_reach_member);
        conditions = tri_and(conditions, member.others_reach_cone);
        conditions = tri_and(conditions, member.product_onto_member);

        report.stats.absorb(member.stats);
        report.members.push_back(std::move(member));
    }

    report.preconditions = preconditions;
    report.conditions = tri_and(preconditions, conditions);

    std::size_t cone_product_size = 1;
    bool overflow = false;
    for (const Digraph * g : family) {
        cone_product_size *= static_cast<std::size_t>(g->size()) + 1;
        if (cone_product_size > direct_core_cap) {
            overflow = true;
            break;
        }
    }
    report.cone_product_size = overflow ? 0 : cone_product_size;
    if (! overflow && cone_product_size <= direct_core_cap) {
        std::vector<ConedDigraph> cones;
        std::vector<const Digraph *> cone_ptrs;
        cones.reserve(family.size());
        for (const Digraph * g : family)
            cones.push_back(cone(*g));
        for (const ConedDigraph & c : cones)
            cone_ptrs.push_back(&c.graph);
        ProductResult prod = tensor_product_family(cone_ptrs, max_vertices);
        report.direct_core_attempted = true;
        report.cone_product_is_core = is_core(prod.product, options, &report.stats);
    }

    report.overall = report.direct_core_attempted
        ? tri_and(report.conditions, report.cone_product_is_core)
        : report.conditions;
    return report;
}

}
