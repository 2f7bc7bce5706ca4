#ifndef HOMCORE_GADGET_HH
#define HOMCORE_GADGET_HH

#include <homcore/digraph.hh>
#include <homcore/search.hh>

#include <array>
#include <optional>
#include <vector>

namespace homcore {

// One edge gadget: the complete join of an edge and a 5-cycle.  The head of
// the encoded arc sits on the edge side, the tail on the cycle side, so a
// graph homomorphism between gadget builds can only respect arc direction.
struct GadgetBlock {
    Arc arc;                   // the source arc this copy encodes
    std::array<int, 5> fresh;  // [0] edge partner of the head, [1..4] cycle interior
};

struct GadgetGraph {
    Digraph graph;    // symmetric, |D| + 5 * arcs(D) vertices
    int origin_size = 0;
    std::vector<GadgetBlock> blocks; // one per arc, in sorted arc order
};

// Replaces every arc of d with a disjoint gadget copy.  Digons get one copy
// per direction.  d must be loop-free (guaranteed by Digraph).
GadgetGraph build_gadget_graph(const Digraph & d);

// The 7-vertex gadget itself: vertices 0 = tail, 1 = head, 2 = edge partner,
// 3..6 = cycle interior.
Digraph make_gadget_prototype();

// Proper 4-colorability of a symmetric digraph, i.e. a homomorphism into the
// complete graph on four vertices.  Throws on non-symmetric input.
Tri is_4_colorable(const Digraph & g, const SearchOptions & options = {},
    SearchStats * stats = nullptr);

struct GadgetEquivalenceReport {
    Tri right_underlying_4colorable = Tri::unknown;
    bool hypothesis_met = false;
    Tri digraph_hom = Tri::unknown;  // D1 -> D2
    Tri gadget_hom = Tri::unknown;   // G[D1] -> G[D2]
    Tri equivalent = Tri::unknown;   // the two verdicts agree
    bool restriction_checked = false;
    Tri restriction_is_hom = Tri::unknown; // found gadget hom, cut to D1's vertices
    std::optional<VertexMap> digraph_witness;
    std::optional<VertexMap> gadget_witness;
    int left_gadget_size = 0;
    int right_gadget_size = 0;
    SearchStats stats;
};

// D1 -> D2 iff G[D1] -> G[D2], provided the underlying graph of D2 is
// 4-colorable; moreover a gadget-level homomorphism restricted to the
// original vertices is a digraph homomorphism.  Both sides are computed
// independently by search and compared.
GadgetEquivalenceReport verify_gadget_equivalence(const Digraph & d1, const Digraph & d2,
    const SearchOptions & options = {});

}

#endif
