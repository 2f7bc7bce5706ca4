#include <homcore/gadget.hh>
#include <algorithm>

namespace homcore {

namespace {

void add_edge(std::vector<Arc> & arcs, int u, int v)
{
    arcs.push_back({u, v});
    arcs.push_back({v, u});
}

}

GadgetGraph build_gadget_graph(const Digraph & d)
{
    GadgetGraph result;
    result.origin_size = d.size();

    const int n = d.size();
    std::vector<Arc> arcs;
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v)
        labels.push_back(d.display_label(v));

    int next = n;
    for (const Arc & a : d.arcs()) {
        GadgetBlock block;
        block.arc = a;
        const int partner = next;
        const int c1 = next + 1, c2 = next + 2, c3 = next + 3, c4 = next + 4;
        block.fresh = {partner, c1, c2, c3, c4};
        next += 5;

        const std::string tag = "a" + std::to_string(result.blocks.size());
        labels.push_back(tag + ":k2");
        for (int i = 1; i <= 4; ++i)
            labels.push_back(tag + ":c" + std::to_string(i));

        const int head = a.to, tail = a.from;
        add_edge(arcs, head, partner);                     // the edge part
        add_edge(arcs, tail, c1);                          // 5-cycle through the tail
        add_edge(arcs, c1, c2);
        add_edge(arcs, c2, c3);
        add_edge(arcs, c3, c4);
        add_edge(arcs, c4, tail);
        for (int cv : {tail, c1, c2, c3, c4}) {            // complete join
            add_edge(arcs, head, cv);
            add_edge(arcs, partner, cv);
        }
        result.blocks.push_back(block);
    }

    // Opposite arcs yield two copies sharing both endpoints, and with them
    // the head-tail join edge; the edge set is their union.
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    result.graph = Digraph::from_arcs(next, std::move(arcs), std::move(labels));
    return result;
}

Digraph make_gadget_prototype()
{
    return build_gadget_graph(make_directed_path(2)).graph;
}

Tri is_4_colorable(const Digraph & g, const SearchOptions & options, SearchStats * stats)
{
    if (! g.is_symmetric())
        throw ValidationError{"4-colorability is defined on symmetric digraphs"};
    HomResult r = find_homomorphism(g, make_complete_graph(4), {}, options);
    if (stats)
        stats->absorb(r.stats);
    return r.found;
}

GadgetEquivalenceReport verify_gadget_equivalence(const Digraph & d1, const Digraph & d2,
    const SearchOptions & options)
{
    GadgetEquivalenceReport report;

    report.right_underlying_4colorable =
        is_4_colorable(d2.underlying_graph(), options, &report.stats);
    report.hypothesis_met = report.right_underlying_4colorable == Tri::yes;
    if (! report.hypothesis_met)
        return report;

    HomResult digraph_side = find_homomorphism(d1, d2, {}, options);
    report.stats.absorb(digraph_side.stats);
    report.digraph_hom = digraph_side.found;
    report.digraph_witness = digraph_side.witness;

    GadgetGraph g1 = build_gadget_graph(d1);
    GadgetGraph g2 = build_gadget_graph(d2);
    report.left_gadget_size = g1.graph.size();
    report.right_gadget_size = g2.graph.size();

    HomResult gadget_side = find_homomorphism(g1.graph, g2.graph, {}, options);
    report.stats.absorb(gadget_side.stats);
    report.gadget_hom = gadget_side.found;
    report.gadget_witness = gadget_side.witness;

    if (report.digraph_hom != Tri::unknown && report.gadget_hom != Tri::unknown)
        report.equivalent = report.digraph_hom == report.gadget_hom ? Tri::yes : Tri::no;

    if (report.gadget_hom == Tri::yes) {
        report.restriction_checked = true;
        const VertexMap & psi = *report.gadget_witness;
        bool ok = true;
        for (int v = 0; v < d1.size() && ok; ++v)
            if (psi.map[v] >= d2.size())
                ok = false;
        if (ok)
            for (const Arc & a : d1.arcs())
                if (! d2.has_arc(psi.map[a.from], psi.map[a.to])) {
                    ok = false;
                    break;
                }
        report.restriction_is_hom = ok ? Tri::yes : Tri::no;
    }

    return report;
}

}
