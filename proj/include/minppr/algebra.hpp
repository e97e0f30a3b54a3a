#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minppr/error.hpp"
#include "minppr/graph.hpp"
#include "minppr/rank.hpp"

namespace minppr {

namespace tolerance {
inline constexpr double reset_negativity = 1e-9;   // is_pagerank_at
inline constexpr double support_zero = 1e-15;      // is_pagerank
inline constexpr double reset_gap = 1e-12;         // recover_reset_probability
inline constexpr double quotient_agreement = 1e-8; // recover_reset_probability
inline constexpr double numerator_slack = 1e-11;   // ditto, for tiny gaps
} // namespace tolerance

/**
 * Candidate reset vector for p at reset probability eps:
 *
 *   R^-1[v] = p[v]/eps - ((1-eps)/eps)·sum_{w in N_in(v)} p[w]/d_out(w)
 *
 * p is a PageRank at eps exactly when this is entrywise nonnegative. The entries
 * always sum to one; they can be negative.
 */
inline std::vector<double> invert_reset(const DirectedGraph& g, const RankVector& p, double eps)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw Error(ErrorCode::BadParams, "eps must lie in (0,1)");
    }
    if (p.size() != g.size()) {
        throw Error(ErrorCode::LengthMismatch, "rank vector does not match graph size");
    }
    auto moved = walk_step(g, p.values());
    std::vector<double> reset(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        reset[v] = p[v] / eps - ((1.0 - eps) / eps) * moved[v];
    }
    return reset;
}

inline bool is_pagerank_at(const DirectedGraph& g, const RankVector& p, double eps)
{
    auto reset = invert_reset(g, p, eps);
    return *std::min_element(reset.begin(), reset.end()) >= -tolerance::reset_negativity;
}

struct PageRankMembership {
    bool member = false;
    std::optional<double> witness_eps;
};

/**
 * Whether p is a PageRank for some reset probability.
 *
 * The support of p must be closed under out-edges. When it is, a witness is
 * eps = max({1/2} ∪ {x_v}) with x_v = 1 - p[v]/S_v, S_v the in-flow into v
 * (x_v = 0 when S_v = 0). Entries at or below 1e-15 count as zero.
 */
inline PageRankMembership is_pagerank(const DirectedGraph& g, const RankVector& p)
{
    if (p.size() != g.size()) {
        throw Error(ErrorCode::LengthMismatch, "rank vector does not match graph size");
    }
    std::vector<double> clamped(p.values());
    for (double& x : clamped) {
        if (x <= tolerance::support_zero) {
            x = 0.0;
        }
    }
    for (VertexId v = 0; v < g.size(); ++v) {
        if (clamped[v] == 0.0) {
            continue;
        }
        for (VertexId w : g.out(v)) {
            if (clamped[w] == 0.0) {
                return {};
            }
        }
    }
    auto inflow = walk_step(g, clamped);
    double eps = 0.5;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (inflow[v] != 0.0) {
            eps = std::max(eps, 1.0 - clamped[v] / inflow[v]);
        }
    }
    return {true, eps};
}

enum class RealizationKind { FixedPoint, Unique, None };

struct RealizationReport {
    RealizationKind kind = RealizationKind::None;
    std::optional<double> eps;
    std::optional<std::vector<double>> reset;
};

/**
 * Recovers eps from p = pagerank(g, R, eps) given R.
 *
 * If R differs from p·M somewhere, eps = (p[v] - pM[v]) / (R[v] - pM[v]) at the
 * vertex with the largest gap, and every other vertex with gap > 1e-12 must
 * agree. Agreement is checked on the numerator, |p[v] - pM[v] - eps·gap| <=
 * 1e-8·|gap| + 1e-11, so float dust at small gaps does not trip it. Otherwise
 * R = p = pM and every eps realizes p.
 */
inline RealizationReport recover_reset_probability(const DirectedGraph& g, const RankVector& p, const RankVector& reset)
{
    if (p.size() != g.size() || reset.size() != g.size()) {
        throw Error(ErrorCode::LengthMismatch, "vector does not match graph size");
    }
    auto moved = walk_step(g, p.values());
    std::size_t best = g.size();
    double best_gap = 0.0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const double gap = std::abs(reset[v] - moved[v]);
        if (gap > tolerance::reset_gap && gap > best_gap) {
            best_gap = gap;
            best = v;
        }
    }
    if (best == g.size()) {
        return {RealizationKind::FixedPoint, std::nullopt, p.values()};
    }
    const double eps = (p[best] - moved[best]) / (reset[best] - moved[best]);
    if (!(eps > 0.0 && eps < 1.0)) {
        throw Error(ErrorCode::Inconsistent, "recovered reset probability " + std::to_string(eps) + " outside (0,1)");
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        const double gap = reset[v] - moved[v];
        if (std::abs(gap) <= tolerance::reset_gap) {
            continue;
        }
        const double mismatch = std::abs((p[v] - moved[v]) - eps * gap);
        if (mismatch > tolerance::quotient_agreement * std::abs(gap) + tolerance::numerator_slack) {
            throw Error(ErrorCode::Inconsistent, "reset quotients disagree at vertex " + std::to_string(v));
        }
    }
    return {RealizationKind::Unique, eps, reset.values()};
}

namespace detail {

inline void check_same_length(const std::vector<RankVector>& vectors)
{
    if (vectors.empty()) {
        throw Error(ErrorCode::EmptyInput, "need at least one vector");
    }
    for (const auto& v : vectors) {
        if (v.size() != vectors.front().size()) {
            throw Error(ErrorCode::LengthMismatch, "vectors differ in length");
        }
    }
}

} // namespace detail

/// Entrywise minimum, L1-normalized.
inline RankVector min_rank(const std::vector<RankVector>& vectors)
{
    detail::check_same_length(vectors);
    std::vector<double> result(vectors.front().values());
    for (const auto& v : vectors) {
        for (std::size_t i = 0; i < result.size(); ++i) {
            result[i] = std::min(result[i], v[i]);
        }
    }
    if (std::accumulate(result.begin(), result.end(), 0.0) <= 0.0) {
        throw Error(ErrorCode::AllZeroMin, "entrywise minimum is identically zero");
    }
    return RankVector::normalized(std::move(result));
}

/// Entrywise median of an odd number of vectors, L1-normalized.
inline RankVector median_rank(const std::vector<RankVector>& vectors)
{
    detail::check_same_length(vectors);
    if (vectors.size() % 2 == 0) {
        throw Error(ErrorCode::EvenCount, "median needs an odd number of vectors");
    }
    const std::size_t n = vectors.front().size();
    std::vector<double> result(n), column(vectors.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            column[j] = vectors[j][i];
        }
        auto mid = column.begin() + static_cast<std::ptrdiff_t>(column.size() / 2);
        std::nth_element(column.begin(), mid, column.end());
        result[i] = *mid;
    }
    if (std::accumulate(result.begin(), result.end(), 0.0) <= 0.0) {
        throw Error(ErrorCode::AllZeroMedian, "entrywise median is identically zero");
    }
    return RankVector::normalized(std::move(result));
}

/// PPR vectors for each center, in center order.
inline std::vector<RankVector> center_pprs(const DirectedGraph& g, const VertexSet& centers, double eps)
{
    std::vector<RankVector> result;
    result.reserve(centers.size());
    for (VertexId c : centers) {
        result.push_back(ppr(g, c, eps));
    }
    return result;
}

/// Normalized entrywise minimum of the PPRs of a coherent center set.
inline RankVector min_ppr(const DirectedGraph& g, const VertexSet& centers, double eps)
{
    VertexSet k = make_vertex_set(centers, g.size());
    if (!is_coherent(g, k)) {
        throw Error(ErrorCode::IncoherentCenters, "center set has no common reachable vertex");
    }
    return min_rank(center_pprs(g, k, eps));
}

/// T-PPR: PPR from the smallest trusted id.
inline RankVector t_ppr(const DirectedGraph& g, const VertexSet& trusted, double eps)
{
    VertexSet t = make_vertex_set(trusted, g.size());
    if (t.empty()) {
        throw Error(ErrorCode::EmptyTrustedSet, "trusted set is empty");
    }
    return ppr(g, t.front(), eps);
}

/// Centers T-Min-PPR draws from T: its min(k, |T|) smallest ids. Depends on T only.
inline VertexSet t_min_ppr_centers(const VertexSet& trusted, std::size_t k)
{
    if (trusted.empty()) {
        throw Error(ErrorCode::EmptyTrustedSet, "trusted set is empty");
    }
    if (k == 0) {
        throw Error(ErrorCode::BadParams, "center budget k must be at least 1");
    }
    VertexSet sorted = trusted;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    sorted.resize(std::min(k, sorted.size()));
    return sorted;
}

inline RankVector t_min_ppr(const DirectedGraph& g, const VertexSet& trusted, std::size_t k, double eps)
{
    VertexSet centers = t_min_ppr_centers(make_vertex_set(trusted, g.size()), k);
    return min_ppr(g, max_coherent_subset(g, centers), eps);
}

struct HardSelectionReport {
    std::vector<double> medians;
    std::vector<std::pair<VertexId, double>> divergences; // (center, xi)
    VertexSet kept;      // K minus the discarded centers
    VertexSet discarded;
    VertexSet used;      // maximum coherent subset of `kept` fed to Min-PPR
    double gamma = 0.0;
    double delta = 0.0;
    bool threshold_empty = false; // no vertex met the median threshold
};

struct HardSelectionResult {
    RankVector rank;
    HardSelectionReport report;
};

/**
 * Median-filtered T-Min-PPR.
 *
 * Takes the min(2k-1, |T|) smallest trusted ids (dropping the largest if that
 * count is even), computes the entrywise median M of their PPRs and for each
 * center the divergence
 *
 *   xi_c = max { (M(y) - ppr_c[y]) / M(y) : M(y) >= 1/(2 n^delta) },
 *
 * with xi_c = 0 when no y meets the threshold. The min(k-1, (|K|-1)/2) centers
 * with the largest xi_c are discarded (larger id first on ties) and Min-PPR is
 * taken over a maximum coherent subset of the rest. gamma is only recorded.
 */
inline HardSelectionResult t_min_ppr_hard(const DirectedGraph& g, const VertexSet& trusted, double gamma, double delta,
    std::size_t k, double eps)
{
    VertexSet t = make_vertex_set(trusted, g.size());
    if (t.empty()) {
        throw Error(ErrorCode::EmptyTrustedSet, "trusted set is empty");
    }
    if (k == 0 || !(delta > 1.0) || !(eps > 0.0 && eps < 1.0)) {
        throw Error(ErrorCode::BadParams, "need k >= 1, delta > 1 and eps in (0,1)");
    }
    std::size_t count = std::min(2 * k - 1, t.size());
    if (count % 2 == 0) {
        --count;
    }
    VertexSet centers(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(count));
    auto pprs = center_pprs(g, centers, eps);

    const std::size_t n = g.size();
    HardSelectionReport report;
    report.gamma = gamma;
    report.delta = delta;
    report.medians.resize(n);
    std::vector<double> column(count);
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t j = 0; j < count; ++j) {
            column[j] = pprs[j][y];
        }
        auto mid = column.begin() + static_cast<std::ptrdiff_t>(count / 2);
        std::nth_element(column.begin(), mid, column.end());
        report.medians[y] = *mid;
    }

    const double threshold = 1.0 / (2.0 * std::pow(static_cast<double>(n), delta));
    report.threshold_empty = std::none_of(
        report.medians.begin(), report.medians.end(), [&](double m) { return m >= threshold; });
    for (std::size_t j = 0; j < count; ++j) {
        double xi = 0.0;
        bool any = false;
        for (std::size_t y = 0; y < n; ++y) {
            const double m = report.medians[y];
            if (m >= threshold) {
                const double d = (m - pprs[j][y]) / m;
                xi = any ? std::max(xi, d) : d;
                any = true;
            }
        }
        report.divergences.emplace_back(centers[j], xi);
    }

    const std::size_t drop = std::min(k - 1, (count - 1) / 2);
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double xa = report.divergences[a].second, xb = report.divergences[b].second;
        if (xa != xb) {
            return xa > xb;
        }
        return centers[a] > centers[b];
    });
    std::vector<char> dropped(count, 0);
    for (std::size_t i = 0; i < drop; ++i) {
        dropped[order[i]] = 1;
    }
    for (std::size_t j = 0; j < count; ++j) {
        (dropped[j] ? report.discarded : report.kept).push_back(centers[j]);
    }
    report.used = max_coherent_subset(g, report.kept);
    std::vector<RankVector> used_pprs;
    for (std::size_t j = 0; j < count; ++j) {
        if (contains(report.used, centers[j])) {
            used_pprs.push_back(pprs[j]);
        }
    }
    return {min_rank(used_pprs), std::move(report)};
}

} // namespace minppr
