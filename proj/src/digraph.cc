#include <homcore/digraph.hh>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace homcore {

Digraph Digraph::from_arcs(int n, std::vector<Arc> arcs, std::vector<std::string> labels)
{
    if (n < 0)
        throw ValidationError{"vertex count must be nonnegative"};
    if (! labels.empty() && static_cast<int>(labels.size()) != n)
        throw ValidationError{"label count does not match vertex count"};

    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto & [u, v] = arcs[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError{"arc (" + std::to_string(u) + ", " + std::to_string(v) +
                ") has a vertex index out of range [0, " + std::to_string(n - 1) + "]"};
        if (u == v)
            throw ValidationError{"loop declared on vertex " + std::to_string(u)};
        if (i > 0 && arcs[i] == arcs[i - 1])
            throw ValidationError{"duplicate arc (" + std::to_string(u) + ", " + std::to_string(v) + ")"};
    }

    Digraph g;
    g.n_ = n;
    g.arcs_ = std::move(arcs);
    g.labels_ = std::move(labels);
    g.out_.assign(n, Bitset(n));
    g.in_.assign(n, Bitset(n));
    for (const auto & [u, v] : g.arcs_) {
        g.out_[u].set(v);
        g.in_[v].set(u);
    }
    for (const auto & [u, v] : g.arcs_) {
        if (g.out_[v].test(u))
            g.antisymmetric_ = false;
        else
            g.symmetric_ = false;
    }
    return g;
}

Digraph Digraph::induced(const Bitset & keep, std::vector<int> * old_ids) const
{
    std::vector<int> ids;
    std::vector<int> new_id(n_, -1);
    for (int v = 0; v < n_; ++v)
        if (keep.test(v)) {
            new_id[v] = static_cast<int>(ids.size());
            ids.push_back(v);
        }

    std::vector<Arc> arcs;
    for (const auto & [u, v] : arcs_)
        if (new_id[u] >= 0 && new_id[v] >= 0)
            arcs.push_back({new_id[u], new_id[v]});

    std::vector<std::string> labels;
    if (has_labels())
        for (int v : ids)
            labels.push_back(labels_[v]);

    if (old_ids)
        *old_ids = ids;
    return from_arcs(static_cast<int>(ids.size()), std::move(arcs), std::move(labels));
}

Digraph Digraph::underlying_graph() const
{
    std::vector<Arc> arcs;
    for (const auto & [u, v] : arcs_) {
        arcs.push_back({u, v});
        if (! out_[v].test(u))
            arcs.push_back({v, u});
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return from_arcs(n_, std::move(arcs), labels_);
}

Digraph Digraph::disjoint_union(const Digraph & other) const
{
    std::vector<Arc> arcs = arcs_;
    for (const auto & [u, v] : other.arcs_)
        arcs.push_back({u + n_, v + n_});

    std::vector<std::string> labels;
    if (has_labels() || other.has_labels()) {
        for (int v = 0; v < n_; ++v)
            labels.push_back(display_label(v));
        for (int v = 0; v < other.n_; ++v)
            labels.push_back(other.display_label(v));
    }
    return from_arcs(n_ + other.n_, std::move(arcs), std::move(labels));
}

bool VertexMap::is_homomorphism(const Digraph & src, const Digraph & tgt) const
{
    if (source_size != src.size() || target_size != tgt.size() ||
        static_cast<int>(map.size()) != src.size())
        return false;
    for (int v : map)
        if (v < 0 || v >= tgt.size())
            return false;
    for (const auto & [u, v] : src.arcs())
        if (! tgt.has_arc(map[u], map[v]))
            return false;
    return true;
}

bool VertexMap::is_idempotent() const
{
    if (source_size != target_size)
        return false;
    for (int v = 0; v < source_size; ++v)
        if (map[map[v]] != map[v])
            return false;
    return true;
}

Bitset VertexMap::image() const
{
    Bitset im(target_size);
    for (int v : map)
        im.set(v);
    return im;
}

VertexMap VertexMap::compose(const VertexMap & outer, const VertexMap & inner)
{
    std::vector<int> m(inner.map.size());
    for (std::size_t v = 0; v < inner.map.size(); ++v)
        m[v] = outer.map[inner.map[v]];
    return VertexMap{inner.source_size, outer.target_size, std::move(m)};
}

VertexMap VertexMap::identity(int n)
{
    std::vector<int> m(n);
    for (int v = 0; v < n; ++v)
        m[v] = v;
    return VertexMap{n, n, std::move(m)};
}

ProductResult tensor_product(const Digraph & g, const Digraph & h, std::size_t max_vertices)
{
    const std::size_t gn = static_cast<std::size_t>(g.size());
    const std::size_t hn = static_cast<std::size_t>(h.size());
    if (hn != 0 && gn > max_vertices / hn)
        throw CapacityError{"product would have " + std::to_string(gn) + " * " +
            std::to_string(hn) + " vertices, over the cap of " + std::to_string(max_vertices)};

    const int n = static_cast<int>(gn * hn);
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(g.arc_count()) * static_cast<std::size_t>(h.arc_count()));
    for (const auto & [u1, u2] : g.arcs())
        for (const auto & [v1, v2] : h.arcs())
            arcs.push_back({u1 * h.size() + v1, u2 * h.size() + v2});

    std::vector<std::string> labels;
    labels.reserve(gn * hn);
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < h.size(); ++v)
            labels.push_back("(" + g.display_label(u) + "," + h.display_label(v) + ")");

    ProductResult result;
    result.product = Digraph::from_arcs(n, std::move(arcs), std::move(labels));

    std::vector<int> pg(n), ph(n);
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < h.size(); ++v) {
            pg[u * h.size() + v] = u;
            ph[u * h.size() + v] = v;
        }
    result.onto_left = VertexMap{n, g.size(), std::move(pg)};
    result.onto_right = VertexMap{n, h.size(), std::move(ph)};
    return result;
}

ProductResult tensor_product_family(const std::vector<const Digraph *> & factors,
    std::size_t max_vertices)
{
    if (factors.empty())
        throw ValidationError{"product of an empty family is not defined"};

    ProductResult acc;
    acc.product = *factors[0];
    acc.onto_left = VertexMap::identity(factors[0]->size());
    acc.onto_right = acc.onto_left;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        ProductResult next = tensor_product(acc.product, *factors[i], max_vertices);
        acc.product = std::move(next.product);
        acc.onto_left = VertexMap::compose(acc.onto_left, next.onto_left);
        acc.onto_right = std::move(next.onto_right);
    }
    return acc;
}

namespace {

bool parse_int(std::string_view token, int & value)
{
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}

Digraph parse_digraph(std::string_view text)
{
    int n = -1;
    std::vector<Arc> arcs;
    std::vector<std::pair<Arc, int>> arc_lines; // for duplicate/loop diagnostics

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].starts_with('#'))
            continue;

        if (n < 0) {
            if (tokens.size() != 1 || ! parse_int(tokens[0], n) || n < 0)
                throw ParseError{line_no, "expected the vertex count"};
            continue;
        }

        if (tokens.size() != 3 || (tokens[1] != "->" && tokens[1] != "<->"))
            throw ParseError{line_no, "expected \"u -> v\" or \"u <-> v\""};

        int u = 0, v = 0;
        if (! parse_int(tokens[0], u) || ! parse_int(tokens[2], v))
            throw ParseError{line_no, "vertex indices must be decimal integers"};
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError{line_no, "vertex index out of range [0, " + std::to_string(n - 1) + "]"};
        if (u == v)
            throw ParseError{line_no, "loop declared on vertex " + std::to_string(u)};

        arc_lines.push_back({{u, v}, line_no});
        if (tokens[1] == "<->")
            arc_lines.push_back({{v, u}, line_no});
    }

    if (n < 0)
        throw ParseError{line_no, "missing vertex count"};

    std::sort(arc_lines.begin(), arc_lines.end(),
        [](const auto & a, const auto & b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
    for (std::size_t i = 1; i < arc_lines.size(); ++i)
        if (arc_lines[i].first == arc_lines[i - 1].first)
            throw ParseError{arc_lines[i].second,
                "duplicate arc (" + std::to_string(arc_lines[i].first.from) + ", " +
                    std::to_string(arc_lines[i].first.to) + ")"};

    arcs.reserve(arc_lines.size());
    for (const auto & [arc, ln] : arc_lines)
        arcs.push_back(arc);
    return Digraph::from_arcs(n, std::move(arcs));
}

std::string format_digraph(const Digraph & g)
{
    std::ostringstream out;
    out << g.size() << "\n";
    for (const auto & [u, v] : g.arcs()) {
        if (g.has_digon(u, v)) {
            if (u < v)
                out << u << " <-> " << v << "\n";
        }
        else {
            out << u << " -> " << v << "\n";
        }
    }
    return out.str();
}

std::string to_dot(const Digraph & g, const std::string & name)
{
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    if (g.has_labels())
        for (int v = 0; v < g.size(); ++v)
            out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
    for (const auto & [u, v] : g.arcs()) {
        if (g.has_digon(u, v)) {
            if (u < v)
                out << "  " << u << " -> " << v << " [dir=none];\n";
        }
        else {
            out << "  " << u << " -> " << v << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

Digraph make_directed_cycle(int n)
{
    if (n < 2)
        throw ValidationError{"a directed cycle needs at least 2 vertices"};
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v)
        arcs.push_back({v, (v + 1) % n});
    return Digraph::from_arcs(n, std::move(arcs));
}

Digraph make_directed_path(int n_vertices)
{
    if (n_vertices < 1)
        throw ValidationError{"a directed path needs at least 1 vertex"};
    std::vector<Arc> arcs;
    for (int v = 0; v + 1 < n_vertices; ++v)
        arcs.push_back({v, v + 1});
    return Digraph::from_arcs(n_vertices, std::move(arcs));
}

Digraph make_complete_graph(int n)
{
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                arcs.push_back({u, v});
    return Digraph::from_arcs(n, std::move(arcs));
}

Digraph make_single_vertex()
{
    return Digraph::from_arcs(1, {});
}

}
