#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "minppr/algebra.hpp"
#include "minppr/constructions.hpp"
#include "minppr/error.hpp"
#include "oracle.hpp"

using namespace minppr;

namespace {

DirectedGraph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
DirectedGraph edge_to_sink() { return build_graph(2, {{0, 1}}); }
DirectedGraph two_cycles() { return build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}); }

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::ParseError;
}

DirectedGraph random_graph(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (std::size_t i = 0; i < rng() % 4; ++i) {
            edges.emplace_back(u, static_cast<VertexId>(rng() % n));
        }
    }
    return build_graph(n, edges);
}

RankVector random_rank(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(n);
    for (auto& x : w) {
        x = u(rng) < 0.3 ? 0.0 : u(rng);
    }
    w[rng() % n] += 0.5;
    return RankVector::normalized(w);
}

void expect_near(const RankVector& p, const std::vector<double>& q, double tol)
{
    ASSERT_EQ(p.size(), q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        EXPECT_NEAR(p[i], q[i], tol) << "entry " << i;
    }
}

} // namespace

TEST(InvertReset, UniformOnCycle)
{
    auto r = invert_reset(triangle(), RankVector::uniform(3), 0.4);
    for (double x : r) {
        EXPECT_NEAR(x, 1.0 / 3, 1e-15);
    }
}

TEST(InvertReset, RoundTrip)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        auto g = random_graph(rng, n);
        auto reset = random_rank(rng, n);
        const double eps = 0.02 + 0.95 * std::uniform_real_distribution<double>()(rng);
        auto back = invert_reset(g, pagerank(g, reset, eps), eps);
        EXPECT_LE(oracle::max_abs_diff(back, reset.values()), 1e-9);
        double sum = 0.0;
        for (double x : back) {
            sum += x;
        }
        EXPECT_NEAR(sum, 1.0, 1e-9);
    }
}

TEST(InvertReset, MedianCounterexampleNegativeAtY1)
{
    MedianLayout layout{5};
    auto g = median_counterexample(5);
    std::vector<RankVector> pprs;
    for (std::size_t i = 0; i < layout.k(); ++i) {
        pprs.push_back(ppr(g, layout.u(i), 0.1));
    }
    auto med = median_rank(pprs);
    EXPECT_LT(invert_reset(g, med, 0.3)[layout.y1()], 0.0);
    EXPECT_FALSE(is_pagerank_at(g, med, 0.3));
    auto weak = is_pagerank(g, med);
    ASSERT_TRUE(weak.member);
    EXPECT_TRUE(is_pagerank_at(g, med, *weak.witness_eps));
}

TEST(IsPageRank, Examples)
{
    auto g = edge_to_sink();
    EXPECT_FALSE(is_pagerank(g, RankVector({1.0, 0.0})).member);
    auto m = is_pagerank(g, RankVector({0.0, 1.0}));
    ASSERT_TRUE(m.member);
    EXPECT_DOUBLE_EQ(*m.witness_eps, 0.5);

    auto h = random_ergodic_graph(10, 2, 2);
    auto any = is_pagerank(h, RankVector::normalized({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    ASSERT_TRUE(any.member);
    EXPECT_TRUE(is_pagerank_at(h, RankVector::normalized({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), *any.witness_eps));
}

TEST(IsPageRankAt, SameEps)
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 20;
        auto g = random_graph(rng, n);
        auto p = pagerank(g, random_rank(rng, n), 0.25);
        EXPECT_TRUE(is_pagerank_at(g, p, 0.25));
        EXPECT_TRUE(is_pagerank(g, p).member);
    }
}

TEST(Recover, Unique)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 20;
        auto g = random_graph(rng, n);
        auto reset = random_rank(rng, n);
        auto p = pagerank(g, reset, 0.2);
        auto rep = recover_reset_probability(g, p, reset);
        if (rep.kind == RealizationKind::Unique) {
            EXPECT_NEAR(*rep.eps, 0.2, 1e-8);
        } else {
            EXPECT_EQ(rep.kind, RealizationKind::FixedPoint);
        }
    }
}

TEST(Recover, FixedPoint)
{
    auto u = RankVector::uniform(3);
    EXPECT_EQ(recover_reset_probability(triangle(), u, u).kind, RealizationKind::FixedPoint);
}

TEST(Recover, MismatchedResetIsInconsistent)
{
    auto g = random_ergodic_graph(12, 3, 6);
    auto p = pagerank(g, RankVector::point_mass(12, 0), 0.2);
    EXPECT_EQ(code_of([&] { recover_reset_probability(g, p, RankVector::point_mass(12, 5)); }),
        ErrorCode::Inconsistent);
}

TEST(MinRank, Examples)
{
    expect_near(min_rank({RankVector({0.5, 0.5, 0}), RankVector({0, 0.5, 0.5})}), {0, 1, 0}, 0);
    auto p = RankVector({0.2, 0.8});
    EXPECT_EQ(min_rank({p}), p);
    EXPECT_EQ(code_of([] { min_rank({RankVector({1, 0}), RankVector({0, 1})}); }), ErrorCode::AllZeroMin);
    EXPECT_EQ(code_of([] { min_rank({RankVector({1, 0}), RankVector({1.0})}); }), ErrorCode::LengthMismatch);
}

TEST(MedianRank, Examples)
{
    expect_near(median_rank({RankVector({1, 0}), RankVector({0, 1}), RankVector({0.5, 0.5})}), {0.5, 0.5}, 0);
    auto p = RankVector({0.3, 0.7});
    EXPECT_EQ(median_rank({p, p, p}), p);
    EXPECT_EQ(code_of([] {
        median_rank({RankVector({1, 0, 0}), RankVector({0, 1, 0}), RankVector({0, 0, 1})});
    }),
        ErrorCode::AllZeroMedian);
    EXPECT_EQ(code_of([&] { median_rank({p, p}); }), ErrorCode::EvenCount);
}

TEST(MinPpr, Examples)
{
    expect_near(min_ppr(clique(3), {0, 1, 2}, 0.3), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1e-12);
    auto g = random_ergodic_graph(10, 2, 7);
    EXPECT_EQ(min_ppr(g, {4}, 0.2), ppr(g, 4, 0.2));
    EXPECT_EQ(code_of([] { min_ppr(two_cycles(), {0, 3}, 0.2); }), ErrorCode::IncoherentCenters);
}

TEST(MinPpr, StrongClosure)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 5 + rng() % 30;
        auto g = random_ergodic_graph(n, 2 + rng() % 3, rng());
        VertexSet k;
        for (std::size_t i = 0; i < 1 + rng() % 5; ++i) {
            k.push_back(static_cast<VertexId>(rng() % n));
        }
        const double eps = std::vector<double>{0.05, 0.1, 0.3}[rng() % 3];
        auto m = min_ppr(g, make_vertex_set(k, n), eps);
        EXPECT_TRUE(is_pagerank_at(g, m, eps));
        double sum = 0.0;
        for (double x : m.values()) {
            ASSERT_GE(x, 0.0);
            sum += x;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
}

TEST(MedianRank, WeakClosure)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4 + rng() % 20;
        auto g = random_graph(rng, n);
        std::vector<RankVector> ranks;
        for (int i = 0; i < 3; ++i) {
            ranks.push_back(pagerank(g, random_rank(rng, n), 0.2));
        }
        try {
            auto med = median_rank(ranks);
            EXPECT_TRUE(is_pagerank(g, med).member);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::AllZeroMedian);
        }
    }
}

TEST(TPpr, Examples)
{
    auto g = edge_to_sink();
    expect_near(t_ppr(g, {0}, 0.2), {0.2, 0.8}, 1e-12);
    auto h = random_ergodic_graph(12, 2, 1);
    EXPECT_EQ(t_ppr(h, {5, 2, 9}, 0.1), ppr(h, 2, 0.1));
    EXPECT_EQ(code_of([&] { t_ppr(h, {}, 0.1); }), ErrorCode::EmptyTrustedSet);

    // Clique with one vertex self-looped: closed form for the looped vertex.
    const std::size_t n = 11;
    std::vector<Edge> edges;
    for (const auto& e : clique(n).edges()) {
        if (e.first != 1) {
            edges.push_back(e);
        }
    }
    edges.emplace_back(1, 1);
    auto looped = build_graph(n, edges);
    EXPECT_NEAR(t_ppr(looped, {0}, 0.1)[1], 0.9 / 1.9, 1e-12);
}

TEST(TMinPpr, Examples)
{
    auto g = random_ergodic_graph(15, 3, 5);
    EXPECT_EQ(t_min_ppr(g, {1, 3, 7, 9}, 3, 0.1), min_ppr(g, {1, 3, 7}, 0.1));
    EXPECT_EQ(t_min_ppr(two_cycles(), {1, 4}, 2, 0.2), ppr(two_cycles(), 1, 0.2));
    EXPECT_EQ(t_min_ppr(g, {6}, 4, 0.1), t_ppr(g, {6}, 0.1));
    EXPECT_EQ(t_min_ppr_centers({9, 2, 5}, 2), (VertexSet{2, 5}));
    EXPECT_EQ(code_of([] { t_min_ppr_centers({}, 2); }), ErrorCode::EmptyTrustedSet);
}

TEST(TMinPprHard, SymmetricTriangle)
{
    auto g = clique(3);
    auto res = t_min_ppr_hard(g, {0, 1, 2}, 0.1, 2.0, 2, 0.2);
    for (const auto& [c, xi] : res.report.divergences) {
        EXPECT_EQ(xi, 0.0) << "center " << c;
    }
    EXPECT_EQ(res.report.discarded, (VertexSet{2}));
    EXPECT_EQ(res.report.kept, (VertexSet{0, 1}));
    EXPECT_EQ(res.rank, min_ppr(g, {0, 1}, 0.2));
}

TEST(TMinPprHard, SingleTrusted)
{
    auto g = random_ergodic_graph(10, 2, 3);
    auto res = t_min_ppr_hard(g, {4}, 0.1, 1.5, 3, 0.2);
    EXPECT_TRUE(res.report.discarded.empty());
    auto single = ppr(g, 4, 0.2);
    for (std::size_t v = 0; v < 10; ++v) {
        EXPECT_NEAR(res.rank[v], single[v], 1e-15);
    }
}

TEST(TMinPprHard, EvenCountDropsLargest)
{
    auto g = random_ergodic_graph(10, 2, 3);
    auto res = t_min_ppr_hard(g, {1, 2, 5, 8}, 0.1, 1.5, 3, 0.2);
    VertexSet all = res.report.kept;
    all.insert(all.end(), res.report.discarded.begin(), res.report.discarded.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, (VertexSet{1, 2, 5}));
    EXPECT_EQ(res.report.discarded.size(), 1u);
}

TEST(TMinPprHard, DiscardsOutlier)
{
    // Center 4 sits on a separate cycle that the others only reach slowly, so
    // its PPR diverges most from the median.
    auto g = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {1, 0}, {0, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {5, 0}});
    auto res = t_min_ppr_hard(g, {0, 1, 2, 4, 5}, 0.1, 1.5, 2, 0.2);
    double worst = -1.0;
    VertexId worst_center = 0;
    for (const auto& [c, xi] : res.report.divergences) {
        if (xi > worst || (xi == worst && c > worst_center)) {
            worst = xi;
            worst_center = c;
        }
    }
    EXPECT_EQ(res.report.discarded, (VertexSet{worst_center}));
    EXPECT_EQ(res.report.medians.size(), 6u);
}

TEST(TMinPprHard, BadParams)
{
    auto g = clique(3);
    EXPECT_EQ(code_of([&] { t_min_ppr_hard(g, {0}, 0.1, 1.0, 2, 0.2); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([&] { t_min_ppr_hard(g, {0}, 0.1, 2.0, 0, 0.2); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([&] { t_min_ppr_hard(g, {}, 0.1, 2.0, 1, 0.2); }), ErrorCode::EmptyTrustedSet);
}
