#ifndef HOMCORE_SEARCH_HH
#define HOMCORE_SEARCH_HH

#include <homcore/digraph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace homcore {

// Three-valued search verdict.  Budget exhaustion yields `unknown`, which is
// never conflated with a definite `no`.
enum class Tri { no, yes, unknown };

inline Tri tri_and(Tri a, Tri b)
{
    if (a == Tri::no || b == Tri::no)
        return Tri::no;
    if (a == Tri::unknown || b == Tri::unknown)
        return Tri::unknown;
    return Tri::yes;
}

inline const char * to_string(Tri t)
{
    switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    default: return "inconclusive";
    }
}

struct SearchOptions {
    std::uint64_t max_nodes = 100'000'000;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;

    void absorb(const SearchStats & other)
    {
        nodes += other.nodes;
        budget_exhausted = budget_exhausted || other.budget_exhausted;
    }
};

struct HomResult {
    Tri found = Tri::unknown;
    std::optional<VertexMap> witness;
    SearchStats stats;
};

using PartialMap = std::vector<std::pair<int, int>>;

// Backtracking search for a homomorphism src -> tgt extending `pins`.
// Variable order is static: degree-descending seeds grown connectedly, so the
// witness is the lexicographically least assignment under that fixed order.
HomResult find_homomorphism(const Digraph & src, const Digraph & tgt,
    const PartialMap & pins = {}, const SearchOptions & options = {});

// Same, with the target restricted to an induced subgraph given by a mask.
HomResult find_homomorphism_masked(const Digraph & src, const Digraph & tgt,
    const Bitset & target_mask, const PartialMap & pins = {},
    const SearchOptions & options = {});

// Retract search: a homomorphism of the subgraph induced by `source_mask`
// into the one induced by `target_mask` (same underlying digraph) that fixes
// every vertex of its image.  Such a map exists iff any homomorphism between
// the two induced subgraphs does, and it is a retract onto its image.
HomResult find_retract(const Digraph & g, const Bitset & source_mask,
    const Bitset & target_mask, const SearchOptions & options = {});

struct EnumResult {
    Tri complete = Tri::unknown; // yes when the search space was exhausted
    std::uint64_t count = 0;
    SearchStats stats;
};

// Visits every homomorphism src -> tgt; the callback returns false to stop.
EnumResult enumerate_homomorphisms(const Digraph & src, const Digraph & tgt,
    const std::function<bool(const VertexMap &)> & visit,
    const SearchOptions & options = {});

// Visits every retract of g (idempotent endomorphisms, identity included).
EnumResult enumerate_retracts(const Digraph & g,
    const std::function<bool(const VertexMap &)> & visit,
    const SearchOptions & options = {});

}

#endif
