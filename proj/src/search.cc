#include <homcore/search.hh>

#include <algorithm>
#include <cassert>

namespace homcore {

namespace {

// Static variable order: seeds by descending degree, grown so that each next
// vertex touches the already-placed region whenever the component allows it
// (forward checking only prunes through arcs into placed vertices).
std::vector<int> make_order(const Digraph & src, const Bitset & smask)
{
    const int n = src.size();
    std::vector<int> order;
    std::vector<char> chosen(n, 0);
    std::vector<int> placed_nbrs(n, 0);

    const std::size_t wanted = smask.count();
    while (order.size() < wanted) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (! smask.test(v) || chosen[v])
                continue;
            if (best < 0) {
                best = v;
                continue;
            }
            if (placed_nbrs[v] != placed_nbrs[best]) {
                if (placed_nbrs[v] > placed_nbrs[best])
                    best = v;
                continue;
            }
            if (src.degree(v) > src.degree(best))
                best = v;
        }
        chosen[best] = 1;
        order.push_back(best);
        for (std::size_t y = src.out(best).find_first(); y != Bitset::npos;
             y = src.out(best).find_next_from(y + 1))
            if (smask.test(y))
                ++placed_nbrs[y];
        for (std::size_t y = src.in(best).find_first(); y != Bitset::npos;
             y = src.in(best).find_next_from(y + 1))
            if (smask.test(y))
                ++placed_nbrs[y];
    }
    return order;
}

struct Budget {
    std::uint64_t max_nodes;
    SearchStats stats;

    bool tick()
    {
        if (++stats.nodes > max_nodes) {
            stats.budget_exhausted = true;
            return false;
        }
        return true;
    }
};

class Searcher {
public:
    enum class Step { found, exhausted, budget, stopped };

    Searcher(const Digraph & src, const Digraph & tgt, const Bitset & smask,
        const Bitset & tmask, bool retract, Budget & budget)
        : src_(src), tgt_(tgt), smask_(smask), retract_(retract), budget_(budget),
          order_(make_order(src, smask)), assignment_(src.size(), -1),
          domain_(src.size())
    {
        for (int v : order_)
            domain_[v] = tmask;
        out_list_.resize(src.size());
        in_list_.resize(src.size());
        for (int v : order_) {
            for (std::size_t y = src.out(v).find_first(); y != Bitset::npos;
                 y = src.out(v).find_next_from(y + 1))
                if (smask.test(y))
                    out_list_[v].push_back(static_cast<int>(y));
            for (std::size_t y = src.in(v).find_first(); y != Bitset::npos;
                 y = src.in(v).find_next_from(y + 1))
                if (smask.test(y))
                    in_list_[v].push_back(static_cast<int>(y));
        }
    }

    bool apply_pins(const PartialMap & pins)
    {
        for (const auto & [v, w] : pins) {
            if (v < 0 || v >= src_.size() || ! smask_.test(v))
                throw ValidationError{"pinned vertex " + std::to_string(v) + " is not in the source"};
            if (w < 0 || w >= tgt_.size())
                throw ValidationError{"pinned image " + std::to_string(w) + " is not in the target"};
            if (! do_assign(v, w))
                return false;
        }
        return true;
    }

    Step solve() { return dfs(0, nullptr); }

    Step enumerate(const std::function<bool(const std::vector<int> &)> & visit)
    {
        return dfs(0, &visit);
    }

    const std::vector<int> & assignment() const { return assignment_; }

private:
    using Visit = std::function<bool(const std::vector<int> &)>;

    Step dfs(std::size_t order_pos, const Visit * visit)
    {
        while (order_pos < order_.size() && assignment_[order_[order_pos]] >= 0)
            ++order_pos;
        if (order_pos == order_.size()) {
            if (! visit)
                return Step::found;
            return (*visit)(assignment_) ? Step::exhausted : Step::stopped;
        }

        if (! budget_.tick())
            return Step::budget;

        const int x = order_[order_pos];
        const Bitset & values = domain_[x];
        for (std::size_t w = values.find_first(); w != Bitset::npos;
             w = values.find_next_from(w + 1)) {
            const std::size_t dmark = domain_trail_.size();
            const std::size_t amark = assign_trail_.size();
            if (do_assign(x, static_cast<int>(w))) {
                Step step = dfs(order_pos + 1, visit);
                if (step == Step::found || step == Step::budget || step == Step::stopped)
                    return step;
            }
            undo(dmark, amark);
        }
        return Step::exhausted;
    }

    // Assigns x -> w, forward-checks neighbours, and in retract mode forces
    // every used target vertex onto itself (cascading).  Returns false on a
    // wipe-out; caller unwinds via the trail marks.
    bool do_assign(int x, int w)
    {
        queue_.clear();
        queue_.push_back({x, w});
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const auto [v, val] = queue_[qi];
            if (assignment_[v] >= 0) {
                if (assignment_[v] != val)
                    return false;
                continue;
            }
            if (! domain_[v].test(val))
                return false;
            assignment_[v] = val;
            assign_trail_.push_back(v);

            if (retract_ && val != v) {
                if (assignment_[val] >= 0) {
                    if (assignment_[val] != val)
                        return false;
                }
                else {
                    queue_.push_back({val, val});
                }
            }

            for (int y : out_list_[v]) {
                if (assignment_[y] >= 0)
                    continue;
                if (! shrink_domain(y, tgt_.out(val)))
                    return false;
            }
            for (int y : in_list_[v]) {
                if (assignment_[y] >= 0)
                    continue;
                if (! shrink_domain(y, tgt_.in(val)))
                    return false;
            }
        }
        return true;
    }

    bool shrink_domain(int y, const Bitset & allowed)
    {
        if (domain_[y].is_subset_of(allowed))
            return ! domain_[y].none();
        domain_trail_.push_back({y, domain_[y]});
        domain_[y].and_with(allowed);
        return ! domain_[y].none();
    }

    void undo(std::size_t dmark, std::size_t amark)
    {
        while (domain_trail_.size() > dmark) {
            auto & [v, saved] = domain_trail_.back();
            domain_[v] = std::move(saved);
            domain_trail_.pop_back();
        }
        while (assign_trail_.size() > amark) {
            assignment_[assign_trail_.back()] = -1;
            assign_trail_.pop_back();
        }
    }

    const Digraph & src_;
    const Digraph & tgt_;
    Bitset smask_;
    bool retract_;
    Budget & budget_;
    std::vector<int> order_;
    std::vector<int> assignment_;
    std::vector<Bitset> domain_;
    std::vector<std::vector<int>> out_list_, in_list_;
    std::vector<std::pair<int, Bitset>> domain_trail_;
    std::vector<int> assign_trail_;
    std::vector<std::pair<int, int>> queue_;
};

// Weakly connected components of the masked source, smallest first so that a
// refutable component refutes the whole instance early.
std::vector<Bitset> weak_components(const Digraph & g, const Bitset & mask)
{
    const int n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<Bitset> comps;
    for (int s = 0; s < n; ++s) {
        if (! mask.test(s) || seen[s])
            continue;
        Bitset comp(n);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            auto push_all = [&](const Bitset & nbrs) {
                for (std::size_t y = nbrs.find_first(); y != Bitset::npos;
                     y = nbrs.find_next_from(y + 1))
                    if (mask.test(y) && ! seen[y]) {
                        seen[y] = 1;
                        stack.push_back(static_cast<int>(y));
                    }
            };
            push_all(g.out(v));
            push_all(g.in(v));
        }
        comps.push_back(std::move(comp));
    }
    std::stable_sort(comps.begin(), comps.end(),
        [](const Bitset & a, const Bitset & b) { return a.count() < b.count(); });
    return comps;
}

HomResult run_decision(const Digraph & src, const Digraph & tgt, const Bitset & smask,
    const Bitset & tmask, bool retract, const PartialMap & pins,
    const SearchOptions & options)
{
    Budget budget{options.max_nodes, {}};
    HomResult result;

    std::vector<int> merged(src.size(), -1);
    bool decompose = pins.empty() && ! retract;
    std::vector<Bitset> comps =
        decompose ? weak_components(src, smask) : std::vector<Bitset>{smask};

    for (const Bitset & comp : comps) {
        Searcher searcher(src, tgt, comp, tmask, retract, budget);
        if (! searcher.apply_pins(pins)) {
            result.found = Tri::no;
            result.stats = budget.stats;
            return result;
        }
        Searcher::Step step = searcher.solve();
        if (step == Searcher::Step::budget) {
            result.found = Tri::unknown;
            result.stats = budget.stats;
            return result;
        }
        if (step == Searcher::Step::exhausted) {
            result.found = Tri::no;
            result.stats = budget.stats;
            return result;
        }
        for (int v = 0; v < src.size(); ++v)
            if (comp.test(v))
                merged[v] = searcher.assignment()[v];
    }

    result.found = Tri::yes;
    result.witness = VertexMap{src.size(), tgt.size(), std::move(merged)};
    result.stats = budget.stats;
    return result;
}

Bitset full_mask(int n)
{
    Bitset mask(n);
    mask.set_all();
    return mask;
}

}

HomResult find_homomorphism(const Digraph & src, const Digraph & tgt,
    const PartialMap & pins, const SearchOptions & options)
{
    return run_decision(src, tgt, full_mask(src.size()), full_mask(tgt.size()),
        false, pins, options);
}

HomResult find_homomorphism_masked(const Digraph & src, const Digraph & tgt,
    const Bitset & target_mask, const PartialMap & pins, const SearchOptions & options)
{
    return run_decision(src, tgt, full_mask(src.size()), target_mask, false, pins, options);
}

HomResult find_retract(const Digraph & g, const Bitset & source_mask,
    const Bitset & target_mask, const SearchOptions & options)
{
    assert(target_mask.is_subset_of(source_mask));
    return run_decision(g, g, source_mask, target_mask, true, {}, options);
}

namespace {

EnumResult run_enumerate(const Digraph & src, const Digraph & tgt, const Bitset & smask,
    const Bitset & tmask, bool retract,
    const std::function<bool(const VertexMap &)> & visit, const SearchOptions & options)
{
    Budget budget{options.max_nodes, {}};
    EnumResult result;

    Searcher searcher(src, tgt, smask, tmask, retract, budget);
    auto wrapped = [&](const std::vector<int> & assignment) {
        ++result.count;
        return visit(VertexMap{src.size(), tgt.size(), assignment});
    };
    Searcher::Step step = searcher.enumerate(wrapped);
    result.complete = step == Searcher::Step::exhausted ? Tri::yes : Tri::unknown;
    result.stats = budget.stats;
    return result;
}

}

EnumResult enumerate_homomorphisms(const Digraph & src, const Digraph & tgt,
    const std::function<bool(const VertexMap &)> & visit, const SearchOptions & options)
{
    return run_enumerate(src, tgt, full_mask(src.size()), full_mask(tgt.size()),
        false, visit, options);
}

EnumResult enumerate_retracts(const Digraph & g,
    const std::function<bool(const VertexMap &)> & visit, const SearchOptions & options)
{
    return run_enumerate(g, g, full_mask(g.size()), full_mask(g.size()),
        true, visit, options);
}

}
