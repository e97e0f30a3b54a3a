#include <gtest/gtest.h>

#include <random>

#include "minppr/constructions.hpp"
#include "minppr/error.hpp"
#include "minppr/graph.hpp"

using namespace minppr;

namespace {

DirectedGraph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

DirectedGraph bidirectional_triangle() { return clique(3); }

DirectedGraph two_cycles() { return build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}); }

} // namespace

TEST(BuildGraph, SinkGetsSelfLoop)
{
    auto g = build_graph(2, {{0, 1}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 1}}));
    EXPECT_TRUE(g.has_implicit_loop(1));
    EXPECT_FALSE(g.has_implicit_loop(0));
    EXPECT_EQ(g.edges(false), (std::vector<Edge>{{0, 1}}));
}

TEST(BuildGraph, CycleUnchanged)
{
    auto g = triangle();
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(BuildGraph, DuplicatesCollapse)
{
    auto g = build_graph(2, {{0, 1}, {0, 1}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 1}}));
}

TEST(BuildGraph, ExplicitSelfLoopIsNotImplicit)
{
    auto g = build_graph(1, {{0, 0}});
    EXPECT_FALSE(g.has_implicit_loop(0));
    EXPECT_NE(g, build_graph(1, std::vector<Edge>{}));
}

TEST(BuildGraph, OutOfRange)
{
    try {
        build_graph(2, {{0, 2}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
    }
}

TEST(BuildGraph, RandomGraphsKeepInvariants)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < 3 * n; ++i) {
            edges.emplace_back(static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n));
        }
        auto g = build_graph(n, edges);
        std::size_t in_total = 0;
        for (VertexId v = 0; v < n; ++v) {
            ASSERT_GE(g.out_degree(v), 1u);
            auto out = g.out(v);
            ASSERT_TRUE(std::is_sorted(out.begin(), out.end()));
            ASSERT_EQ(std::adjacent_find(out.begin(), out.end()), out.end());
            for (VertexId w : out) {
                auto in = g.in(w);
                ASSERT_TRUE(std::binary_search(in.begin(), in.end(), v));
            }
            in_total += g.in_degree(v);
        }
        ASSERT_EQ(in_total, g.edge_count());
    }
}

TEST(Ergodic, Examples)
{
    EXPECT_FALSE(is_ergodic(triangle()));
    EXPECT_TRUE(is_ergodic(bidirectional_triangle()));
    EXPECT_FALSE(is_ergodic(build_graph(2, {{0, 0}, {1, 1}})));
    EXPECT_TRUE(is_ergodic(build_graph(1, {{0, 0}})));
    // Period 2: bidirectional path.
    EXPECT_FALSE(is_ergodic(build_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}})));
    EXPECT_TRUE(is_ergodic(build_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}})));
}

TEST(Ergodic, RandomGenerator)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_TRUE(is_ergodic(random_ergodic_graph(30, 2, seed)));
    }
}

TEST(Scc, CountsAndEssentialClasses)
{
    auto g = build_graph(5, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}, {4, 4}});
    auto scc = strong_components(g);
    EXPECT_EQ(scc.count, 3u);
    EXPECT_EQ(scc.component[0], scc.component[1]);
    EXPECT_EQ(scc.component[2], scc.component[3]);
    EXPECT_EQ(essential_classes(g, scc).size(), 2u);
}

TEST(Coherent, Examples)
{
    EXPECT_TRUE(is_coherent(triangle(), {0, 1, 2}));
    EXPECT_FALSE(is_coherent(build_graph(2, {{0, 0}, {1, 1}}), {0, 1}));
    EXPECT_FALSE(is_coherent(triangle(), {}));
    // Both reach the shared sink.
    EXPECT_TRUE(is_coherent(build_graph(3, {{0, 2}, {1, 2}}), {0, 1}));
}

TEST(Coherent, ErgodicMeansEverySubsetCoherent)
{
    auto g = random_ergodic_graph(15, 2, 3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<VertexId> ids;
        for (VertexId v = 0; v < 15; ++v) {
            if (rng() % 3 == 0) {
                ids.push_back(v);
            }
        }
        if (!ids.empty()) {
            EXPECT_TRUE(is_coherent(g, ids));
        }
    }
}

TEST(MaxCoherent, Examples)
{
    EXPECT_EQ(max_coherent_subset(triangle(), {0, 2}), (VertexSet{0, 2}));
    EXPECT_EQ(max_coherent_subset(two_cycles(), {1, 4}), (VertexSet{1}));
    EXPECT_EQ(max_coherent_subset(two_cycles(), {4}), (VertexSet{4}));
    try {
        max_coherent_subset(triangle(), {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
    }
}

TEST(MaxCoherent, MatchesBruteForce)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 4 + rng() % 10;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < n + rng() % n; ++i) {
            edges.emplace_back(static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n));
        }
        auto g = build_graph(n, edges);
        std::vector<VertexId> ids;
        for (std::size_t i = 0; i < 1 + rng() % 8; ++i) {
            ids.push_back(static_cast<VertexId>(rng() % n));
        }
        auto k = make_vertex_set(ids, n);
        auto best = max_coherent_subset(g, k);
        ASSERT_TRUE(is_coherent(g, best));
        ASSERT_TRUE(std::includes(k.begin(), k.end(), best.begin(), best.end()));
        std::size_t brute = 0;
        for (std::size_t mask = 1; mask < (std::size_t{1} << k.size()); ++mask) {
            VertexSet subset;
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (mask >> i & 1) {
                    subset.push_back(k[i]);
                }
            }
            if (is_coherent(g, subset)) {
                brute = std::max(brute, subset.size());
            }
        }
        ASSERT_EQ(best.size(), brute);
    }
}

TEST(Reachability, FromSet)
{
    auto g = build_graph(4, {{0, 1}, {2, 3}});
    auto r = reachable_from_set(g, {0});
    EXPECT_EQ(r, (std::vector<char>{1, 1, 0, 0}));
}
