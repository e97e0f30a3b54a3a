#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include "minppr/error.hpp"
#include "minppr/graph.hpp"
#include "minppr/rank.hpp"

namespace minppr {

inline double tv_distance(const RankVector& p, const RankVector& q)
{
    if (p.size() != q.size()) {
        throw Error(ErrorCode::LengthMismatch, "tv_distance on vectors of different length");
    }
    return 0.5 * l1_distance(p.span(), q.span());
}

/// Shannon entropy in bits, with 0·log 0 = 0.
inline double entropy(const RankVector& p)
{
    double h = 0.0;
    for (double x : p.values()) {
        if (x > 0.0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

struct WorstCase {};
struct FromVertex {
    VertexId vertex;
};
struct FromDistribution {
    RankVector init;
};

struct MixingQuery {
    double rho = 0.25;
    std::variant<WorstCase, FromVertex, FromDistribution> source = WorstCase{};
};

inline constexpr std::size_t mixing_step_cap = 100'000;

namespace detail {

/// First t with TV(init·M^t, ref) <= rho, scanning forward.
inline std::size_t mixing_scan(const DirectedGraph& g, std::vector<double> p, const RankVector& ref, double rho)
{
    for (std::size_t t = 0; t <= mixing_step_cap; ++t) {
        if (0.5 * l1_distance(p, ref.span()) <= rho) {
            return t;
        }
        p = walk_step(g, p);
    }
    throw Error(ErrorCode::MixingTimeout, "walk did not mix within the step cap");
}

} // namespace detail

/**
 * Mixing time of the uniform walk to within TV distance rho of `ref`
 * (which should be reference_rank(g)). The worst case is the maximum over
 * all start vertices.
 */
inline std::size_t mixing_time(const DirectedGraph& g, const MixingQuery& query, const RankVector& ref)
{
    if (!(query.rho > 0.0 && query.rho < 1.0)) {
        throw Error(ErrorCode::BadParams, "rho must lie in (0,1)");
    }
    if (ref.size() != g.size()) {
        throw Error(ErrorCode::LengthMismatch, "reference rank does not match graph size");
    }
    const std::size_t n = g.size();
    auto from_vertex = [&](VertexId v) {
        if (v >= n) {
            throw Error(ErrorCode::IndexOutOfRange, "mixing source out of range");
        }
        std::vector<double> p(n, 0.0);
        p[v] = 1.0;
        return detail::mixing_scan(g, std::move(p), ref, query.rho);
    };
    if (const auto* src = std::get_if<FromVertex>(&query.source)) {
        return from_vertex(src->vertex);
    }
    if (const auto* src = std::get_if<FromDistribution>(&query.source)) {
        if (src->init.size() != n) {
            throw Error(ErrorCode::LengthMismatch, "initial distribution does not match graph size");
        }
        return detail::mixing_scan(g, src->init.values(), ref, query.rho);
    }
    std::size_t worst = 0;
    for (VertexId v = 0; v < n; ++v) {
        worst = std::max(worst, from_vertex(v));
    }
    return worst;
}

inline std::size_t mixing_time(const DirectedGraph& g, const RankVector& ref, double rho = 0.25)
{
    return mixing_time(g, MixingQuery{rho, WorstCase{}}, ref);
}

/// Per-start-vertex mixing times.
inline std::vector<std::size_t> vertex_mixing_times(const DirectedGraph& g, const RankVector& ref, double rho = 0.25)
{
    std::vector<std::size_t> times(g.size());
    for (VertexId v = 0; v < g.size(); ++v) {
        times[v] = mixing_time(g, MixingQuery{rho, FromVertex{v}}, ref);
    }
    return times;
}

/// E_{X~R}[mixing time from X]. Start vertices with R[x] = 0 are skipped.
inline double expected_mixing_time(const DirectedGraph& g, const RankVector& reset, double rho, const RankVector& ref)
{
    if (reset.size() != g.size()) {
        throw Error(ErrorCode::LengthMismatch, "distribution does not match graph size");
    }
    double total = 0.0;
    for (VertexId x = 0; x < g.size(); ++x) {
        if (reset[x] > 0.0) {
            total += reset[x] * static_cast<double>(mixing_time(g, MixingQuery{rho, FromVertex{x}}, ref));
        }
    }
    return total;
}

struct DistortionParams {
    double delta = 1.0;
};

struct VertexDistortion {
    VertexId vertex;
    double stretch;
    double contraction;
    double distortion;
};

struct DistortionReport {
    double delta = 1.0;
    std::vector<VertexDistortion> per_vertex;
    double graph_distortion = 1.0;
    VertexId worst_vertex = 0;
};

/**
 * Stretch and contraction of x against ref with values below 1/n^delta
 * clamped to that threshold:
 *
 *   stretch(v) = max(x[v], t) / max(ref[v], t),  contraction = 1/stretch.
 */
inline DistortionReport distortion(const RankVector& x, const DirectedGraph& g, const DistortionParams& params,
    const RankVector& ref)
{
    if (!(params.delta >= 1.0)) {
        throw Error(ErrorCode::BadParams, "significance exponent delta must be >= 1");
    }
    if (x.size() != g.size() || ref.size() != g.size()) {
        throw Error(ErrorCode::LengthMismatch, "rank vectors do not match graph size");
    }
    const double threshold = std::pow(static_cast<double>(g.size()), -params.delta);
    DistortionReport report;
    report.delta = params.delta;
    report.per_vertex.reserve(g.size());
    for (VertexId v = 0; v < g.size(); ++v) {
        const double num = std::max(x[v], threshold);
        const double den = std::max(ref[v], threshold);
        const double stretch = num / den;
        const double contraction = den / num;
        const double d = std::max(stretch, contraction);
        report.per_vertex.push_back({v, stretch, contraction, d});
        if (d > report.graph_distortion) {
            report.graph_distortion = d;
            report.worst_vertex = v;
        }
    }
    return report;
}

} // namespace minppr
