#ifndef HOMCORE_CORE_HH
#define HOMCORE_CORE_HH

#include <homcore/digraph.hh>
#include <homcore/search.hh>

namespace homcore {

// yes iff no homomorphism of g into any vertex-deleted induced subgraph
// exists; unknown when some deletion search ran out of budget.
Tri is_core(const Digraph & g, const SearchOptions & options = {}, SearchStats * stats = nullptr);

struct CoreResult {
    Digraph core;               // induced subgraph of the input
    std::vector<int> kept;      // original indices of the core's vertices
    VertexMap retraction;       // idempotent endomorphism of the input with image `kept`
    bool certified = false;     // false when a budget ran out before minimality was proved
    SearchStats stats;
};

// Folds g onto smaller induced subgraphs until no vertex can be dropped.
// When certified, the result is a core and the smallest digraph
// hom-equivalent to g; otherwise it is the best image found so far.
CoreResult compute_core(const Digraph & g, const SearchOptions & options = {});

struct SurjectivityResult {
    Tri verdict = Tri::unknown;
    bool hom_exists = false;              // false also covers the "no hom at all" case
    std::optional<VertexMap> nonsurjective; // a witness missing some target vertex
    SearchStats stats;
};

// yes iff some homomorphism g -> h exists and every one of them is onto.  A
// non-surjective homomorphism misses some vertex v, i.e. is a homomorphism
// into h minus v, so the check runs one search per deleted target vertex.
SurjectivityResult all_homs_to_target_surjective(const Digraph & g, const Digraph & h,
    const SearchOptions & options = {});

// g -> h and h -> g
Tri are_hom_equivalent(const Digraph & g, const Digraph & h,
    const SearchOptions & options = {}, SearchStats * stats = nullptr);

}

#endif
