#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "minppr/algebra.hpp"
#include "minppr/constructions.hpp"
#include "minppr/error.hpp"
#include "minppr/graph.hpp"
#include "minppr/rank.hpp"

namespace minppr {

/**
 * A spam attack on base graph G: the spammer owns the purchased set P and the
 * new vertices S = {n_G, ..., n_H - 1} of H, and may rewire their out-edges.
 * Ids 0..n_G-1 denote the same vertices in G and H.
 */
struct SpamScenario {
    DirectedGraph base;
    VertexSet trusted;
    VertexSet purchased;
    DirectedGraph spam_graph;

    VertexSet spam_nodes() const
    {
        VertexSet s;
        for (std::size_t v = base.size(); v < spam_graph.size(); ++v) {
            s.push_back(static_cast<VertexId>(v));
        }
        return s;
    }

    /// S ∪ P, the vertices whose rank counts as the spammer's gain.
    VertexSet owned() const
    {
        VertexSet owned = purchased;
        auto s = spam_nodes();
        owned.insert(owned.end(), s.begin(), s.end());
        return owned;
    }
};

/**
 * H is an admissible attack on (G, T) with purchased set P: P avoids T, H keeps
 * every vertex of G, and each vertex outside P has the same out-edges in H as
 * in G. Vertices of S ∪ P are unconstrained.
 *
 * Out-edges are compared before the sink convention, i.e. an implicit
 * self-loop only matches another implicit self-loop.
 */
inline bool validate_spam_graph(const DirectedGraph& base, const VertexSet& trusted, const VertexSet& purchased,
    const DirectedGraph& spam_graph)
{
    const std::size_t n = base.size();
    if (spam_graph.size() < n) {
        return false;
    }
    for (VertexId t : trusted) {
        if (t >= n) {
            return false;
        }
    }
    for (VertexId p : purchased) {
        if (p >= n || contains(trusted, p)) {
            return false;
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (contains(purchased, v)) {
            continue;
        }
        auto before = base.out(v);
        auto after = spam_graph.out(v);
        if (base.has_implicit_loop(v) != spam_graph.has_implicit_loop(v)
            || !std::equal(before.begin(), before.end(), after.begin(), after.end())) {
            return false;
        }
    }
    return true;
}

inline void validate(const SpamScenario& scenario)
{
    if (scenario.trusted.empty()) {
        throw Error(ErrorCode::EmptyTrustedSet, "scenario has no trusted vertices");
    }
    if (!validate_spam_graph(scenario.base, scenario.trusted, scenario.purchased, scenario.spam_graph)) {
        throw Error(ErrorCode::InvalidScenario, "spam graph is not an admissible attack on the base graph");
    }
}

/// Normalized prices over V_G \ T (zero on T).
struct CostFunction {
    std::vector<double> costs;

    double of(const VertexSet& set) const
    {
        double total = 0.0;
        for (VertexId v : set) {
            total += costs.at(v);
        }
        return total;
    }
};

namespace detail {

inline CostFunction restrict_to_untrusted(std::vector<double> weights, const VertexSet& trusted)
{
    double total = 0.0;
    for (VertexId v = 0; v < weights.size(); ++v) {
        if (contains(trusted, v)) {
            weights[v] = 0.0;
        } else {
            total += weights[v];
        }
    }
    if (total <= 1e-15) {
        throw Error(ErrorCode::DegenerateCost, "no purchasable rank outside the trusted set");
    }
    for (double& w : weights) {
        w /= total;
    }
    return {std::move(weights)};
}

} // namespace detail

/// Cost that makes T-PPR eps-spam resistant: its own PPR renormalized on V \ T.
inline CostFunction ppr_cost(const DirectedGraph& g, const VertexSet& trusted, double eps)
{
    VertexSet t = make_vertex_set(trusted, g.size());
    auto rank = t_ppr(g, t, eps);
    return detail::restrict_to_untrusted(rank.values(), t);
}

/// Average of the PPR costs of T-Min-PPR's centers, renormalized on V \ T.
inline CostFunction minppr_cost(const DirectedGraph& g, const VertexSet& trusted, std::size_t k, double eps)
{
    VertexSet t = make_vertex_set(trusted, g.size());
    VertexSet centers = t_min_ppr_centers(t, k);
    std::vector<double> avg(g.size(), 0.0);
    for (const auto& p : center_pprs(g, centers, eps)) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            avg[v] += p[v] / static_cast<double>(centers.size());
        }
    }
    return detail::restrict_to_untrusted(std::move(avg), t);
}

struct TPPR {};
struct TMinPPR {
    std::size_t k;
};
struct UPR {};
using RankingAlgorithm = std::variant<TPPR, TMinPPR, UPR>;

inline RankVector run_ranking(const DirectedGraph& g, const VertexSet& trusted, const RankingAlgorithm& algo, double eps)
{
    if (std::holds_alternative<TPPR>(algo)) {
        return t_ppr(g, trusted, eps);
    }
    if (const auto* m = std::get_if<TMinPPR>(&algo)) {
        return t_min_ppr(g, trusted, m->k, eps);
    }
    return pagerank(g, RankVector::uniform(g.size()), eps);
}

/// Rank the algorithm assigns to S ∪ P when run on H with the original T.
inline double spam_gain(const SpamScenario& scenario, const RankingAlgorithm& algo, double eps)
{
    validate(scenario);
    return run_ranking(scenario.spam_graph, scenario.trusted, algo, eps).mass(scenario.owned());
}

inline constexpr double unbounded_gain_threshold = 1e-15;

/// C(P) / gain, or nullopt (unbounded) when the gain is zero.
inline std::optional<double> spam_ratio(const SpamScenario& scenario, const CostFunction& cost,
    const RankingAlgorithm& algo, double eps)
{
    const double gain = spam_gain(scenario, algo, eps);
    if (gain <= unbounded_gain_threshold) {
        return std::nullopt;
    }
    return cost.of(scenario.purchased) / gain;
}

/// Buys the cheapest vertex of a clique and replaces its out-edges with a self-loop.
inline SpamScenario attack_clique_selfloop(const DirectedGraph& g, const VertexSet& trusted, const CostFunction& cost)
{
    if (!is_bidirectional_clique(g)) {
        throw Error(ErrorCode::InvalidBase, "self-loop attack needs a bidirectional clique");
    }
    VertexSet t = make_vertex_set(trusted, g.size());
    if (t.size() != 1) {
        throw Error(ErrorCode::BadParams, "self-loop attack needs exactly one trusted vertex");
    }
    if (cost.costs.size() != g.size()) {
        throw Error(ErrorCode::LengthMismatch, "cost function does not match graph size");
    }
    std::optional<VertexId> cheapest;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (v != t.front() && (!cheapest || cost.costs[v] < cost.costs[*cheapest])) {
            cheapest = v;
        }
    }
    const VertexId p = *cheapest;
    std::vector<Edge> edges;
    for (const auto& e : g.edges(false)) {
        if (e.first != p) {
            edges.push_back(e);
        }
    }
    edges.emplace_back(p, p);
    return {g, t, {p}, build_graph(g.size(), edges)};
}

/// H = G plus a disjoint copy of G; the copy is the spam set and nothing is bought.
inline SpamScenario attack_duplicate(const DirectedGraph& g, const VertexSet& trusted = {0})
{
    VertexSet t = make_vertex_set(trusted, g.size());
    const auto n = static_cast<VertexId>(g.size());
    std::vector<Edge> edges = g.edges(false);
    for (const auto& [u, v] : g.edges(false)) {
        edges.emplace_back(u + n, v + n);
    }
    return {g, t, {}, build_graph(2 * g.size(), edges)};
}

/// Buys v and points it at a ring of m new spam vertices.
inline SpamScenario attack_sink_farm(const DirectedGraph& g, const VertexSet& trusted, VertexId v, std::size_t m)
{
    VertexSet t = make_vertex_set(trusted, g.size());
    if (v >= g.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "farm vertex out of range");
    }
    if (contains(t, v)) {
        throw Error(ErrorCode::TrustedPurchase, "cannot buy a trusted vertex");
    }
    if (m < 1) {
        throw Error(ErrorCode::BadParams, "farm needs at least one spam vertex");
    }
    const std::size_t n = g.size();
    std::vector<Edge> edges;
    for (const auto& e : g.edges(false)) {
        if (e.first != v) {
            edges.push_back(e);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto s = static_cast<VertexId>(n + i);
        edges.emplace_back(v, s);
        edges.emplace_back(s, static_cast<VertexId>(n + (i + 1) % m));
    }
    return {g, t, {v}, build_graph(n + m, edges)};
}

/**
 * Random admissible attack: buys `purchased`, adds `spam_count` new vertices,
 * and gives every owned vertex 1..max_out random out-edges. With probability
 * `leak` each edge may point anywhere in H rather than into S ∪ P.
 */
inline SpamScenario attack_random_rewire(const DirectedGraph& g, const VertexSet& trusted, const VertexSet& purchased,
    std::size_t spam_count, std::size_t max_out, double leak, std::mt19937_64& rng)
{
    VertexSet t = make_vertex_set(trusted, g.size());
    VertexSet p = make_vertex_set(purchased, g.size());
    for (VertexId v : p) {
        if (contains(t, v)) {
            throw Error(ErrorCode::TrustedPurchase, "cannot buy a trusted vertex");
        }
    }
    const std::size_t n = g.size();
    const std::size_t nh = n + spam_count;
    VertexSet owned = p;
    for (std::size_t i = n; i < nh; ++i) {
        owned.push_back(static_cast<VertexId>(i));
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges(false)) {
        if (!contains(p, e.first)) {
            edges.push_back(e);
        }
    }
    if (!owned.empty()) {
        std::uniform_int_distribution<std::size_t> degree(1, std::max<std::size_t>(1, max_out));
        std::uniform_int_distribution<std::size_t> any(0, nh - 1);
        std::uniform_int_distribution<std::size_t> own(0, owned.size() - 1);
        std::bernoulli_distribution escapes(leak);
        for (VertexId u : owned) {
            const std::size_t d = degree(rng);
            for (std::size_t i = 0; i < d; ++i) {
                const auto target = escapes(rng) ? static_cast<VertexId>(any(rng)) : owned[own(rng)];
                edges.emplace_back(u, target);
            }
        }
    }
    return {g, t, p, build_graph(nh, edges)};
}

} // namespace minppr
