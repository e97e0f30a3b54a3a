#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "minppr/error.hpp"
#include "minppr/graph.hpp"

namespace minppr {

/// Bidirectional clique: every ordered pair (u, v) with u != v.
inline DirectedGraph clique(std::size_t n)
{
    if (n < 2) {
        throw Error(ErrorCode::TooSmall, "clique needs n >= 2");
    }
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1));
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (u != v) {
                edges.emplace_back(u, v);
            }
        }
    }
    return build_graph(n, edges);
}

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
inline DirectedGraph cycle(std::size_t n)
{
    if (n < 1) {
        throw Error(ErrorCode::TooSmall, "cycle needs n >= 1");
    }
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        edges.emplace_back(u, static_cast<VertexId>((u + 1) % n));
    }
    return build_graph(n, edges);
}

inline bool is_bidirectional_clique(const DirectedGraph& g)
{
    const std::size_t n = g.size();
    if (n < 2) {
        return false;
    }
    for (VertexId u = 0; u < n; ++u) {
        if (g.out_degree(u) != n - 1 || g.has_edge(u, u)) {
            return false;
        }
    }
    return true;
}

/**
 * Fast-mixing family on which uniform-reset PageRank is badly distorted.
 *
 * Ids 0..k-1 are the chain v_1..v_k and k..2k-1 the set S. Edges:
 * v_i -> v_{i+1} for i <= k-2, v_{k-1} -> every s, every s -> v_k, and
 * v_i -> v_1 for all i (so v_1 carries a self-loop).
 */
inline DirectedGraph upr_bad_family(std::size_t k)
{
    if (k < 3) {
        throw Error(ErrorCode::TooSmall, "upr_bad_family needs k >= 3");
    }
    auto v = [](std::size_t i) { return static_cast<VertexId>(i - 1); }; // 1-based chain index
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= k - 2; ++i) {
        edges.emplace_back(v(i), v(i + 1));
    }
    for (std::size_t s = k; s < 2 * k; ++s) {
        edges.emplace_back(v(k - 1), static_cast<VertexId>(s));
        edges.emplace_back(static_cast<VertexId>(s), v(k));
    }
    for (std::size_t i = 1; i <= k; ++i) {
        edges.emplace_back(v(i), v(1));
    }
    return build_graph(2 * k, edges);
}

/// Vertex ids used by median_counterexample(ell).
struct MedianLayout {
    std::size_t ell;
    std::size_t k() const { return 2 * ell + 1; }
    VertexId u(std::size_t i) const { return static_cast<VertexId>(i); }         // i in [0, k)
    VertexId v(std::size_t j) const { return static_cast<VertexId>(k() + j); } // j in [0, k)
    VertexId y1() const { return static_cast<VertexId>(2 * k()); }
    VertexId y2() const { return static_cast<VertexId>(2 * k() + 1); }
    std::size_t size() const { return 2 * k() + 2; }
};

/**
 * Graph on which the normalized median of PPRs is not a PageRank at the
 * same reset probability.
 *
 * With k = 2*ell + 1: u_i -> v_i, v_{i+1}, ..., v_{i+ell} (indices mod k),
 * every v_j -> y1, y1 -> y2, and y2 is a sink (self-loop). The y1 -> y2 tail
 * is the smallest structure under which a walk from u_i visits each v_j and
 * y1 at most once, so ppr(u_i)[v_j] = eps(1-eps)/(ell+1) on its targets and
 * ppr(u_i)[y1] = eps(1-eps)^2.
 */
inline DirectedGraph median_counterexample(std::size_t ell)
{
    if (ell < 1) {
        throw Error(ErrorCode::TooSmall, "median_counterexample needs ell >= 1");
    }
    MedianLayout layout{ell};
    const std::size_t k = layout.k();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t off = 0; off <= ell; ++off) {
            edges.emplace_back(layout.u(i), layout.v((i + off) % k));
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        edges.emplace_back(layout.v(j), layout.y1());
    }
    edges.emplace_back(layout.y1(), layout.y2());
    return build_graph(layout.size(), edges);
}

/// Replaces edge (u, v) with m two-edge relays u -> w_i -> v through new vertices.
inline DirectedGraph path_inflation(const DirectedGraph& g, Edge edge, std::size_t m)
{
    const auto [u, v] = edge;
    if (u >= g.size() || v >= g.size() || !g.has_edge(u, v) || (u == v && g.has_implicit_loop(u))) {
        throw Error(ErrorCode::MissingEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    }
    if (m < 1) {
        throw Error(ErrorCode::BadParams, "path_inflation needs m >= 1");
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges(false)) {
        if (e != edge) {
            edges.push_back(e);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto w = static_cast<VertexId>(g.size() + i);
        edges.emplace_back(u, w);
        edges.emplace_back(w, v);
    }
    return build_graph(g.size() + m, edges);
}

/**
 * Seeded random ergodic digraph: d distinct random out-neighbours per vertex,
 * a Hamiltonian cycle through a random permutation, and a self-loop at 0.
 */
inline DirectedGraph random_ergodic_graph(std::size_t n, std::size_t d, std::uint64_t seed)
{
    if (n < 2 || d < 1 || d >= n) {
        throw Error(ErrorCode::BadParams, "random_ergodic_graph needs n >= 2 and 1 <= d < n");
    }
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(n * (d + 1) + 1);
    std::vector<VertexId> others(n - 1);
    for (VertexId u = 0; u < n; ++u) {
        // Partial Fisher-Yates over the n-1 candidate targets.
        for (VertexId i = 0, w = 0; w < n; ++w) {
            if (w != u) {
                others[i++] = w;
            }
        }
        for (std::size_t i = 0; i < d; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 2);
            std::swap(others[i], others[pick(rng)]);
            edges.emplace_back(u, others[i]);
        }
    }
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(perm[i], perm[(i + 1) % n]);
    }
    edges.emplace_back(0, 0);
    return build_graph(n, edges);
}

/// Parameters of a generated family; round-trips through the JSON sidecar.
struct GeneratorSpec {
    struct Clique {
        std::size_t n;
    };
    struct Cycle {
        std::size_t n;
    };
    struct UprBad {
        std::size_t k;
    };
    struct MedianX {
        std::size_t ell;
    };
    struct RandomErgodic {
        std::size_t n;
        std::size_t d;
        std::uint64_t seed;
    };
    struct PathInflation {
        std::vector<GeneratorSpec> base; // exactly one element
        Edge edge;
        std::size_t m;
    };
    std::variant<Clique, Cycle, UprBad, MedianX, RandomErgodic, PathInflation> family;
};

inline DirectedGraph generate(const GeneratorSpec& spec)
{
    return std::visit(
        [](const auto& f) -> DirectedGraph {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, GeneratorSpec::Clique>) {
                return clique(f.n);
            } else if constexpr (std::is_same_v<F, GeneratorSpec::Cycle>) {
                return cycle(f.n);
            } else if constexpr (std::is_same_v<F, GeneratorSpec::UprBad>) {
                return upr_bad_family(f.k);
            } else if constexpr (std::is_same_v<F, GeneratorSpec::MedianX>) {
                return median_counterexample(f.ell);
            } else if constexpr (std::is_same_v<F, GeneratorSpec::RandomErgodic>) {
                return random_ergodic_graph(f.n, f.d, f.seed);
            } else {
                if (f.base.size() != 1) {
                    throw Error(ErrorCode::BadParams, "path inflation needs exactly one base family");
                }
                return path_inflation(generate(f.base.front()), f.edge, f.m);
            }
        },
        spec.family);
}

} // namespace minppr
