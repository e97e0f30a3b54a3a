#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minppr/error.hpp"
#include "minppr/graph.hpp"

namespace minppr {

/**
 * Nonnegative vector over the vertices that sums to one.
 *
 * Construction checks the invariant (entries >= 0, |sum - 1| <= 1e-9 for
 * caller-supplied data) and rescales so the stored sum is 1 up to rounding.
 */
class RankVector {
public:
    static constexpr double sum_tolerance = 1e-9;

    RankVector() = default;

    explicit RankVector(std::vector<double> values) : values_(std::move(values))
    {
        double total = 0.0;
        for (double x : values_) {
            if (!(x >= 0.0) || !std::isfinite(x)) {
                throw Error(ErrorCode::InvalidRankVector, "negative or non-finite entry");
            }
            total += x;
        }
        if (values_.empty() || std::abs(total - 1.0) > sum_tolerance) {
            throw Error(ErrorCode::InvalidRankVector, "entries sum to " + std::to_string(total));
        }
        for (double& x : values_) {
            x /= total;
        }
    }

    /// L1-normalizes a nonnegative vector with positive mass.
    static RankVector normalized(std::vector<double> values)
    {
        double total = 0.0;
        for (double x : values) {
            total += x;
        }
        if (!(total > 0.0)) {
            throw Error(ErrorCode::InvalidRankVector, "cannot normalize a vector with no mass");
        }
        for (double& x : values) {
            x /= total;
        }
        return RankVector(std::move(values));
    }

    static RankVector point_mass(std::size_t n, VertexId v)
    {
        if (v >= n) {
            throw Error(ErrorCode::IndexOutOfRange, "point mass at " + std::to_string(v));
        }
        std::vector<double> values(n, 0.0);
        values[v] = 1.0;
        return RankVector(std::move(values));
    }

    static RankVector uniform(std::size_t n)
    {
        return RankVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    /// Uniform over a nonempty vertex set.
    static RankVector uniform_on(std::size_t n, const VertexSet& support)
    {
        if (support.empty()) {
            throw Error(ErrorCode::EmptyInput, "uniform_on needs a nonempty support");
        }
        std::vector<double> values(n, 0.0);
        for (VertexId v : support) {
            values.at(v) = 1.0 / static_cast<double>(support.size());
        }
        return RankVector(std::move(values));
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::span<const double> span() const noexcept { return values_; }

    double mass(const VertexSet& set) const
    {
        double total = 0.0;
        for (VertexId v : set) {
            total += values_.at(v);
        }
        return total;
    }

    friend bool operator==(const RankVector&, const RankVector&) = default;

private:
    std::vector<double> values_;
};

/// Reset vector plus reset probability; together with a graph this fixes the walk.
class ResetModel {
public:
    ResetModel(RankVector reset, double eps) : reset_(std::move(reset)), eps_(eps)
    {
        if (!(eps > 0.0 && eps < 1.0)) {
            throw Error(ErrorCode::BadParams, "reset probability must lie in (0,1), got " + std::to_string(eps));
        }
    }

    const RankVector& reset() const noexcept { return reset_; }
    double eps() const noexcept { return eps_; }

private:
    RankVector reset_;
    double eps_;
};

inline double l1_distance(std::span<const double> a, std::span<const double> b)
{
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::abs(a[i] - b[i]);
    }
    return total;
}

/// One step of the uniform walk: returns p·M with M[u,v] = 1/d_out(u).
inline std::vector<double> walk_step(const DirectedGraph& g, std::span<const double> p)
{
    std::vector<double> next(g.size(), 0.0);
    for (VertexId u = 0; u < g.size(); ++u) {
        if (p[u] == 0.0) {
            continue;
        }
        const double share = p[u] / static_cast<double>(g.out_degree(u));
        for (VertexId v : g.out(u)) {
            next[v] += share;
        }
    }
    return next;
}

inline RankVector walk_distribution(const DirectedGraph& g, const RankVector& init, std::size_t steps)
{
    if (init.size() != g.size()) {
        throw Error(ErrorCode::LengthMismatch, "initial distribution does not match graph size");
    }
    std::vector<double> p = init.values();
    for (std::size_t t = 0; t < steps; ++t) {
        p = walk_step(g, p);
    }
    return RankVector::normalized(std::move(p));
}

namespace detail {
inline constexpr double convergence_l1 = 1e-13;
inline constexpr std::size_t reference_iteration_cap = 1'000'000;
} // namespace detail

/**
 * Stationary distribution of the uniform walk.
 *
 * Iterates the lazy kernel (M + I)/2 from uniform; it has the same fixed
 * points as M and converges whenever there is a single essential class.
 */
inline RankVector reference_rank(const DirectedGraph& g)
{
    auto scc = strong_components(g);
    if (essential_classes(g, scc).size() != 1) {
        throw Error(ErrorCode::MultipleEssentialClasses, "reference rank is not unique");
    }
    const std::size_t n = g.size();
    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    for (std::size_t iter = 0; iter < detail::reference_iteration_cap; ++iter) {
        auto moved = walk_step(g, p);
        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            const double next = 0.5 * (p[v] + moved[v]);
            change += std::abs(next - p[v]);
            p[v] = next;
        }
        if (change <= detail::convergence_l1) {
            return RankVector::normalized(std::move(p));
        }
    }
    throw Error(ErrorCode::NonConvergence, "reference rank did not converge");
}

/// Iteration cap for the PageRank power method at reset probability eps.
inline std::size_t pagerank_iteration_cap(double eps)
{
    return static_cast<std::size_t>(std::ceil(std::log(1e-16) / std::log1p(-eps))) + 100;
}

/**
 * PageRank: the unique fixed point of p = (1-eps)·p·M + eps·R.
 *
 * Power iteration from p0 = R. The L1 change of one step equals the fixed-point
 * residual, so stopping at change <= 1e-13 bounds the returned residual too.
 */
inline RankVector pagerank(const DirectedGraph& g, const ResetModel& rm)
{
    const auto& reset = rm.reset().values();
    if (reset.size() != g.size()) {
        throw Error(ErrorCode::LengthMismatch, "reset vector does not match graph size");
    }
    const double eps = rm.eps();
    const std::size_t n = g.size();
    const std::size_t cap = pagerank_iteration_cap(eps);
    std::vector<double> p = reset;
    for (std::size_t iter = 0; iter < cap; ++iter) {
        auto moved = walk_step(g, p);
        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            const double next = (1.0 - eps) * moved[v] + eps * reset[v];
            change += std::abs(next - p[v]);
            p[v] = next;
        }
        if (change <= detail::convergence_l1) {
            return RankVector::normalized(std::move(p));
        }
    }
    throw Error(ErrorCode::NonConvergence, "PageRank iteration cap reached");
}

inline RankVector pagerank(const DirectedGraph& g, const RankVector& reset, double eps)
{
    return pagerank(g, ResetModel(reset, eps));
}

/// Personalized PageRank with a point-mass reset at `center`.
inline RankVector ppr(const DirectedGraph& g, VertexId center, double eps)
{
    return pagerank(g, ResetModel(RankVector::point_mass(g.size(), center), eps));
}

/**
 * Truncated walk series eps·sum_{i<=h} (1-eps)^i·R·M^i, divided by its own
 * mass 1-(1-eps)^{h+1}. Independent of the power iteration; used as an oracle.
 */
inline RankVector pagerank_series_oracle(const DirectedGraph& g, const ResetModel& rm, std::size_t horizon)
{
    const double eps = rm.eps();
    std::vector<double> walk = rm.reset().values();
    std::vector<double> sum(g.size(), 0.0);
    double weight = eps;
    for (std::size_t i = 0; i <= horizon; ++i) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            sum[v] += weight * walk[v];
        }
        if (i < horizon) {
            walk = walk_step(g, walk);
            weight *= 1.0 - eps;
        }
    }
    const double mass = 1.0 - std::pow(1.0 - eps, static_cast<double>(horizon + 1));
    for (double& x : sum) {
        x /= mass;
    }
    return RankVector::normalized(std::move(sum));
}

/// L1 fixed-point residual ||p - ((1-eps)·p·M + eps·R)||_1.
inline double pagerank_residual(const DirectedGraph& g, const RankVector& p, const ResetModel& rm)
{
    auto moved = walk_step(g, p.values());
    double total = 0.0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        total += std::abs(p[v] - ((1.0 - rm.eps()) * moved[v] + rm.eps() * rm.reset()[v]));
    }
    return total;
}

} // namespace minppr
