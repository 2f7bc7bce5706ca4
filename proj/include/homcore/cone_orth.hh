#ifndef HOMCORE_CONE_ORTH_HH
#define HOMCORE_CONE_ORTH_HH

#include <homcore/core.hh>
#include <homcore/digraph.hh>
#include <homcore/search.hh>

#include <optional>
#include <vector>

namespace homcore {

struct ConedDigraph {
    Digraph graph;
    int apex = 0; // always |base|
};

// Adds a universal vertex joined by digons to every base vertex.
ConedDigraph cone(const Digraph & base);

struct OrthogonalityReport {
    Tri verdict = Tri::unknown;
    SurjectivityResult onto_left;
    SurjectivityResult onto_right;
    int product_size = 0;
};

// Two digraphs are orthogonal when every homomorphism of their product to
// either factor is onto.
OrthogonalityReport are_orthogonal(const Digraph & g, const Digraph & h,
    const SearchOptions & options = {},
    std::size_t max_vertices = default_max_product_vertices);

struct OrthogonalizedPair {
    Digraph left;
    Digraph right;
    std::vector<int> left_kept;  // original indices
    std::vector<int> right_kept;
    bool certified = false;
    SearchStats stats;
};

// Shrinks each factor to an inclusion-minimal induced subgraph that the
// product still maps into.  The product of the results is hom-equivalent to
// the original product, and the core of the product maps onto both results
// only surjectively.
OrthogonalizedPair orthogonalize_pair(const Digraph & g, const Digraph & h,
    const SearchOptions & options = {},
    std::size_t max_vertices = default_max_product_vertices);

struct TwoConeReport {
    bool left_oriented = false;
    bool right_oriented = false;
    Tri incomparable = Tri::unknown;
    Tri orthogonal = Tri::unknown;
    Tri hypotheses = Tri::unknown;
    bool conclusion_checked = false;
    Tri cone_product_is_core = Tri::unknown;
    Tri overall = Tri::unknown;
    int cone_product_size = 0;
    SearchStats stats;
};

// For orthogonal, incomparable oriented factors the product of their cones
// is a core; hypotheses are validated, never assumed, and the conclusion is
// only searched for once they hold.
TwoConeReport verify_two_cone_theorem(const Digraph & g, const Digraph & h,
    const SearchOptions & options = {},
    std::size_t max_vertices = default_max_product_vertices);

struct VscMemberReport {
    int index = 0;
    bool oriented = false;
    Tri member_is_core = Tri::unknown;
    Tri incomparable_with_rest = Tri::unknown;
    bool degenerate = false; // singleton family: no "others" to test
    Tri others_do_not_reach_member = Tri::unknown;   // condition (a), first half
    Tri others_reach_cone = Tri::unknown;            // condition (a), second half
    std::optional<VertexMap> cone_witness;
    Tri product_onto_member = Tri::unknown;          // condition (b)
    SearchStats stats;
};

struct VscFamilyReport {
    std::vector<VscMemberReport> members;
    Tri preconditions = Tri::unknown;       // oriented cores, pairwise incomparable
    Tri conditions = Tri::unknown;          // (a) and (b) over all members
    bool direct_core_attempted = false;
    std::size_t cone_product_size = 0;
    Tri cone_product_is_core = Tri::unknown;
    Tri overall = Tri::unknown;
    SearchStats stats;
};

// Sufficient conditions for the product of the cones of a family to be a
// core: each member is an oriented core, members are pairwise incomparable,
// the product of the other members reaches the member's cone but not the
// member itself, and the full product maps onto every member only
// surjectively.  When the cone product is at most direct_core_cap vertices
// the conclusion is additionally confirmed by a direct core check.
VscFamilyReport verify_vsc_conditions(const std::vector<const Digraph *> & family,
    const SearchOptions & options = {},
    std::size_t max_vertices = default_max_product_vertices,
    std::size_t direct_core_cap = 400,
    bool use_digon_shortcut = false);

}

#endif
