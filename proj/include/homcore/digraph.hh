#ifndef HOMCORE_DIGRAPH_HH
#define HOMCORE_DIGRAPH_HH

#include <homcore/bitset.hh>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homcore {

struct Arc {
    int from;
    int to;
    auto operator<=>(const Arc &) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string & message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_number(line)
    {
    }

    int line_number;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A loop-free digraph on vertices 0..n-1 with set semantics on arcs.  A digon
// (pair of opposite arcs) models an undirected edge.  Immutable after
// construction, so freely shareable between concurrent searches.
class Digraph {
public:
    Digraph() = default;

    // Throws ValidationError on loops, duplicate arcs, or out-of-range indices.
    static Digraph from_arcs(int n, std::vector<Arc> arcs, std::vector<std::string> labels = {});

    int size() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    const std::vector<Arc> & arcs() const { return arcs_; }

    bool has_arc(int u, int v) const { return out_[u].test(v); }
    bool has_digon(int u, int v) const { return out_[u].test(v) && in_[u].test(v); }

    const Bitset & out(int v) const { return out_[v]; }
    const Bitset & in(int v) const { return in_[v]; }

    int out_degree(int v) const { return static_cast<int>(out_[v].count()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].count()); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    // arc set closed under reversal
    bool is_symmetric() const { return symmetric_; }
    // no digons
    bool is_antisymmetric() const { return antisymmetric_; }

    bool has_labels() const { return ! labels_.empty(); }
    const std::string & label(int v) const { return labels_[v]; }
    const std::vector<std::string> & labels() const { return labels_; }

    // Provenance label, falling back to the index when unlabelled.
    std::string display_label(int v) const
    {
        return has_labels() ? labels_[v] : std::to_string(v);
    }

    // Induced subgraph on the vertices in `keep`; old_ids (if given) receives
    // the original index of each new vertex, in increasing order.
    Digraph induced(const Bitset & keep, std::vector<int> * old_ids = nullptr) const;

    // Symmetric closure: every arc completed to a digon.
    Digraph underlying_graph() const;

    Digraph disjoint_union(const Digraph & other) const;

    // Structural equality: vertex count and arc set (labels are provenance only).
    bool operator==(const Digraph & other) const
    {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

private:
    int n_ = 0;
    std::vector<Arc> arcs_; // sorted, unique
    std::vector<Bitset> out_, in_;
    std::vector<std::string> labels_;
    bool symmetric_ = true;
    bool antisymmetric_ = true;
};

// A total vertex map between two digraphs, usually a homomorphism witness.
struct VertexMap {
    int source_size = 0;
    int target_size = 0;
    std::vector<int> map;

    VertexMap() = default;
    VertexMap(int src, int tgt, std::vector<int> m)
        : source_size(src), target_size(tgt), map(std::move(m))
    {
    }

    int operator()(int v) const { return map[v]; }

    // u -> v in src implies map(u) -> map(v) in tgt (digons follow automatically)
    bool is_homomorphism(const Digraph & src, const Digraph & tgt) const;

    // map o map == map; meaningful when source and target coincide
    bool is_idempotent() const;

    Bitset image() const;

    // (outer o inner)(v) = outer(inner(v))
    static VertexMap compose(const VertexMap & outer, const VertexMap & inner);

    static VertexMap identity(int n);

    bool operator==(const VertexMap &) const = default;
};

struct ProductResult {
    Digraph product;
    VertexMap onto_left;  // projection to G
    VertexMap onto_right; // projection to H
};

inline constexpr std::size_t default_max_product_vertices = 200000;

// Tensor product on pairs in row-major order: (u, v) -> u * |H| + v.
// Throws CapacityError when |G|*|H| exceeds max_vertices.
ProductResult tensor_product(const Digraph & g, const Digraph & h,
    std::size_t max_vertices = default_max_product_vertices);

// Iterated binary product in input order; requires at least one factor.
ProductResult tensor_product_family(const std::vector<const Digraph *> & factors,
    std::size_t max_vertices = default_max_product_vertices);

// Text format: first significant line is the vertex count, then one arc per
// line ("u -> v" or "u <-> v"); '#' starts a comment line.
Digraph parse_digraph(std::string_view text);
std::string format_digraph(const Digraph & g);

// DOT rendering: digons as undirected edges, plain arcs directed.
std::string to_dot(const Digraph & g, const std::string & name = "G");

// Small builders used throughout.
Digraph make_directed_cycle(int n);
Digraph make_directed_path(int n_vertices);
Digraph make_complete_graph(int n); // digons everywhere
Digraph make_single_vertex();

}

#endif
