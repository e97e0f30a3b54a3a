#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minppr/error.hpp"

namespace minppr {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/**
 * Simple directed graph in compressed (CSR) form, stored in both directions.
 *
 * Every vertex has out-degree at least one: a vertex with no out-edges gets a
 * self-loop when the graph is built. Such loops are remembered as implicit so
 * that serialization can drop them again.
 */
class DirectedGraph {
public:
    DirectedGraph() = default;

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return out_targets_.size(); }

    std::span<const VertexId> out(VertexId v) const
    {
        return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
    }
    std::span<const VertexId> in(VertexId v) const
    {
        return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
    }

    std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

    bool has_edge(VertexId u, VertexId v) const
    {
        auto targets = out(u);
        return std::binary_search(targets.begin(), targets.end(), v);
    }

    /// True when v was a sink and its self-loop was added at construction.
    bool has_implicit_loop(VertexId v) const { return implicit_loop_[v] != 0; }

    /// Edge list in (source, target) order. Implicit self-loops are included
    /// only on request.
    std::vector<Edge> edges(bool include_implicit = true) const
    {
        std::vector<Edge> result;
        result.reserve(edge_count());
        for (VertexId u = 0; u < n_; ++u) {
            if (!include_implicit && has_implicit_loop(u)) {
                continue;
            }
            for (VertexId v : out(u)) {
                result.emplace_back(u, v);
            }
        }
        return result;
    }

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

private:
    friend DirectedGraph build_graph(std::size_t n, std::span<const Edge> edges);

    std::size_t n_ = 0;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<VertexId> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<VertexId> in_sources_;
    std::vector<char> implicit_loop_;
};

/// Builds a simple digraph: duplicate edges collapse, sinks receive a self-loop.
inline DirectedGraph build_graph(std::size_t n, std::span<const Edge> edges)
{
    std::vector<Edge> sorted(edges.begin(), edges.end());
    for (const auto& [u, v] : sorted) {
        if (u >= n || v >= n) {
            throw Error(ErrorCode::IndexOutOfRange,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n = " + std::to_string(n));
        }
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    DirectedGraph g;
    g.n_ = n;
    g.implicit_loop_.assign(n, 0);

    std::vector<std::size_t> out_count(n, 0);
    for (const auto& e : sorted) {
        ++out_count[e.first];
    }
    std::vector<Edge> all;
    all.reserve(sorted.size() + n);
    std::size_t next = 0;
    for (VertexId u = 0; u < n; ++u) {
        if (out_count[u] == 0) {
            all.emplace_back(u, u);
            g.implicit_loop_[u] = 1;
        }
        while (next < sorted.size() && sorted[next].first == u) {
            all.push_back(sorted[next++]);
        }
    }

    g.out_offsets_.assign(n + 1, 0);
    g.in_offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : all) {
        ++g.out_offsets_[u + 1];
        ++g.in_offsets_[v + 1];
    }
    std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
    std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());

    g.out_targets_.resize(all.size());
    g.in_sources_.resize(all.size());
    std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    // `all` is sorted by (source, target), so both CSR halves come out sorted.
    for (std::size_t i = 0; i < all.size(); ++i) {
        g.out_targets_[i] = all[i].second;
        g.in_sources_[in_fill[all[i].second]++] = all[i].first;
    }
    return g;
}

inline DirectedGraph build_graph(std::size_t n, std::initializer_list<Edge> edges)
{
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline DirectedGraph build_graph(std::size_t n, const std::vector<Edge>& edges)
{
    return build_graph(n, std::span<const Edge>(edges));
}

/// Sorts, deduplicates and range-checks a vertex set.
inline VertexSet make_vertex_set(std::vector<VertexId> ids, std::size_t n)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (!ids.empty() && ids.back() >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
            "vertex " + std::to_string(ids.back()) + " with n = " + std::to_string(n));
    }
    return ids;
}

inline bool contains(const VertexSet& set, VertexId v)
{
    return std::binary_search(set.begin(), set.end(), v);
}

/// Vertices reachable from `source` (including itself), as a 0/1 mask.
inline std::vector<char> reachable_from(const DirectedGraph& g, VertexId source)
{
    std::vector<char> seen(g.size(), 0);
    std::vector<VertexId> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId v : g.out(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

/// Vertices reachable from any vertex of `sources`.
inline std::vector<char> reachable_from_set(const DirectedGraph& g, const VertexSet& sources)
{
    std::vector<char> seen(g.size(), 0);
    std::vector<VertexId> stack;
    for (VertexId s : sources) {
        if (!seen[s]) {
            seen[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId v : g.out(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

struct StrongComponents {
    std::vector<std::size_t> component; // component index per vertex
    std::size_t count = 0;
};

/// Tarjan's algorithm, iterative.
inline StrongComponents strong_components(const DirectedGraph& g)
{
    const std::size_t n = g.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    StrongComponents result;
    result.component.assign(n, 0);
    std::size_t counter = 0;

    struct Frame {
        VertexId v;
        std::size_t next_edge;
    };
    std::vector<Frame> call;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            auto targets = g.out(f.v);
            if (f.next_edge < targets.size()) {
                VertexId w = targets[f.next_edge++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            VertexId v = f.v;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
            if (low[v] == index[v]) {
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    result.component[w] = result.count;
                } while (w != v);
                ++result.count;
            }
        }
    }
    return result;
}

/// Components with no edge leaving them (the closed communicating classes of
/// the uniform walk).
inline std::vector<std::size_t> essential_classes(const DirectedGraph& g, const StrongComponents& scc)
{
    std::vector<char> leaks(scc.count, 0);
    for (VertexId u = 0; u < g.size(); ++u) {
        for (VertexId v : g.out(u)) {
            if (scc.component[u] != scc.component[v]) {
                leaks[scc.component[u]] = 1;
            }
        }
    }
    std::vector<std::size_t> result;
    for (std::size_t c = 0; c < scc.count; ++c) {
        if (!leaks[c]) {
            result.push_back(c);
        }
    }
    return result;
}

inline bool is_strongly_connected(const DirectedGraph& g)
{
    if (g.size() == 0) {
        return false;
    }
    return strong_components(g).count == 1;
}

/// Strongly connected and aperiodic. The period is the gcd of
/// level(u) + 1 - level(v) over all edges, with BFS levels from vertex 0.
inline bool is_ergodic(const DirectedGraph& g)
{
    if (!is_strongly_connected(g)) {
        return false;
    }
    const std::size_t n = g.size();
    std::vector<long long> level(n, -1);
    std::vector<VertexId> queue{0};
    level[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId v : g.out(u)) {
            if (level[v] < 0) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    long long period = 0;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.out(u)) {
            long long diff = level[u] + 1 - level[v];
            period = std::gcd(period, diff < 0 ? -diff : diff);
        }
    }
    return period == 1;
}

namespace detail {

/// For every vertex, how many centers of K reach it.
inline std::vector<std::size_t> reach_counts(const DirectedGraph& g, const VertexSet& centers)
{
    std::vector<std::size_t> counts(g.size(), 0);
    for (VertexId c : centers) {
        auto seen = reachable_from(g, c);
        for (std::size_t v = 0; v < g.size(); ++v) {
            counts[v] += seen[v] ? 1 : 0;
        }
    }
    return counts;
}

} // namespace detail

/// K is coherent when it is nonempty and some vertex is reachable from all of K.
inline bool is_coherent(const DirectedGraph& g, const VertexSet& centers)
{
    if (centers.empty()) {
        return false;
    }
    auto counts = detail::reach_counts(g, centers);
    return std::any_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == centers.size(); });
}

/**
 * Largest coherent subset of `centers`.
 *
 * Every coherent subset shares some witness vertex, so the subset of centers
 * reaching the most-reached vertex is maximum. Ties go to the smallest witness.
 */
inline VertexSet max_coherent_subset(const DirectedGraph& g, const VertexSet& centers)
{
    if (centers.empty()) {
        throw Error(ErrorCode::EmptyInput, "max_coherent_subset needs at least one center");
    }
    auto counts = detail::reach_counts(g, centers);
    auto witness = static_cast<VertexId>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    VertexSet result;
    for (VertexId c : centers) {
        if (reachable_from(g, c)[witness]) {
            result.push_back(c);
        }
    }
    return result;
}

} // namespace minppr
