#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "minppr/algebra.hpp"
#include "minppr/constructions.hpp"
#include "minppr/error.hpp"
#include "minppr/graph.hpp"
#include "minppr/metrics.hpp"
#include "minppr/rank.hpp"
#include "minppr/spam.hpp"

namespace minppr::harness {

/// One checked inequality. margin > 0 means the trial passed with room to spare.
struct TrialDiagnostic {
    double bound = 0.0;
    double measured = 0.0;
    double margin = 0.0;
    bool passed = false;
    std::string note;
};

struct SuiteResult {
    std::string name;
    std::string claim;
    std::string pass_rule;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t required = 0; // trials that must pass
    double time_limit_seconds = 0.0;
    std::vector<TrialDiagnostic> diagnostics;
    bool verdict = false;

    void expect_at_most(double measured, double bound, std::string note = {})
    {
        record(bound, measured, bound - measured, measured <= bound, std::move(note));
    }
    void expect_at_least(double measured, double bound, std::string note = {})
    {
        record(bound, measured, measured - bound, measured >= bound, std::move(note));
    }
    void expect_below(double measured, double bound, std::string note = {})
    {
        record(bound, measured, bound - measured, measured < bound, std::move(note));
    }
    void expect_true(bool ok, std::string note)
    {
        record(1.0, ok ? 1.0 : 0.0, ok ? 1.0 : -1.0, ok, std::move(note));
    }

    void finish(std::size_t required_passes)
    {
        required = required_passes;
        verdict = trials > 0 && passed >= required;
    }
    void finish_all() { finish(trials); }

private:
    void record(double bound, double measured, double margin, bool ok, std::string note)
    {
        diagnostics.push_back({bound, measured, margin, ok, std::move(note)});
        ++trials;
        passed += ok ? 1 : 0;
    }
};

inline SuiteResult open_suite(std::string name, std::string claim, std::string pass_rule, double time_limit_seconds)
{
    SuiteResult r;
    r.name = std::move(name);
    r.claim = std::move(claim);
    r.pass_rule = std::move(pass_rule);
    r.time_limit_seconds = time_limit_seconds;
    return r;
}

inline nlohmann::json to_json(const SuiteResult& r)
{
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& d : r.diagnostics) {
        trials.push_back(
            {{"bound", d.bound}, {"measured", d.measured}, {"margin", d.margin}, {"passed", d.passed}, {"note", d.note}});
    }
    return {
        {"suite", r.name},
        {"claim", r.claim},
        {"pass_rule", r.pass_rule},
        {"trials", r.trials},
        {"passed", r.passed},
        {"required", r.required},
        {"time_limit_seconds", r.time_limit_seconds},
        {"verdict", r.verdict ? "pass" : "fail"},
        {"diagnostics", trials},
    };
}

inline std::string io_note(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

// --- random inputs --------------------------------------------------------------

using Rng = std::mt19937_64;

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// `size` distinct vertices drawn uniformly from [0, n).
inline VertexSet random_subset(Rng& rng, std::size_t n, std::size_t size)
{
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), VertexId{0});
    for (std::size_t i = 0; i < size; ++i) {
        std::swap(all[i], all[uniform_size(rng, i, n - 1)]);
    }
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

/// Random distribution on a random support of the given size.
inline RankVector random_rank(Rng& rng, std::size_t n, std::size_t support)
{
    std::vector<double> w(n, 0.0);
    for (VertexId v : random_subset(rng, n, support)) {
        w[v] = uniform_real(rng, 0.05, 1.0);
    }
    return RankVector::normalized(std::move(w));
}

/// Random distribution supported inside `allowed`.
inline RankVector random_rank_on(Rng& rng, std::size_t n, const VertexSet& allowed)
{
    std::vector<double> w(n, 0.0);
    const std::size_t support = uniform_size(rng, 1, allowed.size());
    for (VertexId i : random_subset(rng, allowed.size(), support)) {
        w[allowed[i]] = uniform_real(rng, 0.05, 1.0);
    }
    return RankVector::normalized(std::move(w));
}

/// Arbitrary random digraph (sinks, several components and periodicity all possible).
inline DirectedGraph random_digraph(Rng& rng, std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        const std::size_t d = uniform_size(rng, 0, std::min<std::size_t>(3, n));
        for (std::size_t i = 0; i < d; ++i) {
            edges.emplace_back(u, static_cast<VertexId>(uniform_size(rng, 0, n - 1)));
        }
    }
    return build_graph(n, edges);
}

/// Either a random ergodic graph or an arbitrary random digraph.
inline DirectedGraph random_graph(Rng& rng, std::size_t n)
{
    if (std::bernoulli_distribution(0.5)(rng)) {
        return random_ergodic_graph(n, uniform_size(rng, 1, std::min<std::size_t>(4, n - 1)), rng());
    }
    return random_digraph(rng, n);
}

inline VertexId sample_vertex(Rng& rng, const RankVector& p)
{
    std::discrete_distribution<std::size_t> pick(p.values().begin(), p.values().end());
    return static_cast<VertexId>(pick(rng));
}

// --- suites -----------------------------------------------------------------------

/// Min of PPRs sharing eps is again a PageRank at eps.
inline SuiteResult suite_min_closure(std::uint64_t seed)
{
    auto r = open_suite("min-closure", "normalized min of PPRs at eps is a PageRank at eps", "200/200 trials", 60.0);
    Rng rng(seed);
    const double eps_grid[] = {0.05, 0.1, 0.3};
    const std::size_t k_grid[] = {2, 3, 5};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = uniform_size(rng, 5, 50);
        const std::size_t d = std::min(uniform_size(rng, 2, 5), n - 1);
        const double eps = eps_grid[uniform_size(rng, 0, 2)];
        const std::size_t k = k_grid[uniform_size(rng, 0, 2)];
        auto g = random_ergodic_graph(n, d, rng());
        if (trial == 0) {
            r.expect_true(is_ergodic(g), "generator yields an ergodic graph");
        }
        auto centers = random_subset(rng, n, k);
        auto m = min_ppr(g, centers, eps);
        auto reset = invert_reset(g, m, eps);
        const double lowest = *std::min_element(reset.begin(), reset.end());
        r.expect_at_least(lowest, -tolerance::reset_negativity,
            "n=" + std::to_string(n) + " eps=" + io_note(eps) + " |K|=" + std::to_string(k));
    }
    r.finish_all();
    return r;
}

/// Median of PPRs on the counterexample is not a PageRank at any eta <= 1/2,
/// but is a PageRank for some larger reset probability.
inline SuiteResult suite_median_failure(std::uint64_t /*seed*/)
{
    auto r = open_suite("median-failure", "median of PPRs leaves P_eta for every eta <= 1/2 but stays weakly closed",
        "all trials", 1.0);
    const std::size_t ell = 5;
    const double eps = 0.1;
    MedianLayout layout{ell};
    auto g = median_counterexample(ell);
    std::vector<RankVector> pprs;
    for (std::size_t i = 0; i < layout.k(); ++i) {
        pprs.push_back(ppr(g, layout.u(i), eps));
    }
    auto med = median_rank(pprs);
    for (int step = 1; step <= 10; ++step) {
        const double eta = 0.05 * step;
        const double at_y1 = invert_reset(g, med, eta)[layout.y1()];
        r.expect_below(at_y1, -1e-12, "eta=" + io_note(eta));
        r.expect_true(!is_pagerank_at(g, med, eta), "not a PageRank at eta=" + io_note(eta));
    }
    auto member = is_pagerank(g, med);
    r.expect_true(member.member, "weak closure: median is a PageRank for some eps");
    if (member.witness_eps) {
        r.expect_true(is_pagerank_at(g, med, *member.witness_eps), "witness eps=" + io_note(*member.witness_eps));
    }
    r.finish_all();
    return r;
}

/// Self-loop attack on K_1000 nearly meets the T-PPR resistance bound.
inline SuiteResult suite_clique_tightness(std::uint64_t /*seed*/)
{
    auto r = open_suite("clique-tightness", "self-loop attack on a clique gets ratio within [eps, eps(1+eta)/(1-eps)]",
        "all trials", 5.0);
    const std::size_t n = 1000;
    const double eps = 0.1, eta = 0.02;
    auto g = clique(n);
    VertexSet trusted{0};
    auto cost = ppr_cost(g, trusted, eps);
    auto scenario = attack_clique_selfloop(g, trusted, cost);
    const double gain = spam_gain(scenario, TPPR{}, eps);
    const double closed = (1.0 - eps) / (static_cast<double>(n - 1) * eps + 1.0 - eps);
    r.expect_at_most(std::abs(gain - closed), 1e-9, "gain vs (1-eps)/((n-1)eps+1-eps)");
    const double ratio = *spam_ratio(scenario, cost, TPPR{}, eps);
    r.expect_at_least(ratio, eps, "ratio >= eps");
    r.expect_at_most(ratio, eps * (1.0 + eta) / (1.0 - eps), "ratio <= eps(1+eta)/(1-eps)");
    r.expect_true(static_cast<double>(n) >= 2.0 / (eps * eta) - 1e-9, "n >= 2/(eps*eta)");
    r.finish_all();
    return r;
}

/// Uniform-reset PageRank is distorted on G(20) although the graph mixes in 4 steps.
inline SuiteResult suite_upr_distortion(std::uint64_t /*seed*/)
{
    auto r = open_suite("upr-distortion", "UPR distortion on G(k) >= eps(1-eps)n/2 with mixing time <= 4", "all trials", 1.0);
    const std::size_t k = 20;
    const double eps = 0.1, delta = 1.0;
    auto g = upr_bad_family(k);
    auto ref = reference_rank(g);
    auto upr = pagerank(g, RankVector::uniform(g.size()), eps);
    auto report = distortion(upr, g, {delta}, ref);
    const double n = static_cast<double>(g.size());
    r.expect_at_least(report.graph_distortion, 0.5 * eps * (1.0 - eps) * std::pow(n, delta), "D_1(UPR)");
    const std::size_t tau = mixing_time(g, ref);
    r.expect_at_most(static_cast<double>(tau), 4.0, "worst-case mixing time");
    double worst_tv = 0.0;
    for (VertexId v = 0; v < g.size(); ++v) {
        worst_tv = std::max(worst_tv, tv_distance(walk_distribution(g, RankVector::point_mass(g.size(), v), tau), ref));
    }
    r.expect_at_most(worst_tv, 0.25, "TV after tau steps from every vertex");
    r.finish_all();
    return r;
}

struct MixingGraph {
    DirectedGraph graph;
    RankVector ref;
    std::size_t tau;
    double eps;
};

/// The 50 n=100 graphs shared by the contraction and TV suites, with
/// eps = 1/(2 T (3 + log2 n)) for their measured worst-case mixing time T.
inline std::vector<MixingGraph> mixing_graphs(std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<MixingGraph> graphs;
    const double log_n = std::log2(100.0);
    for (int i = 0; i < 50; ++i) {
        auto g = random_ergodic_graph(100, uniform_size(rng, 2, 5), rng());
        auto ref = reference_rank(g);
        const std::size_t tau = mixing_time(g, ref);
        const double eps = 1.0 / (2.0 * static_cast<double>(tau) * (3.0 + log_n));
        graphs.push_back({std::move(g), std::move(ref), tau, eps});
    }
    return graphs;
}

/// Every PageRank on a fast-mixing graph has small contraction.
inline SuiteResult suite_contraction_bound(std::uint64_t seed)
{
    auto r = open_suite("contraction-bound", "contraction <= 1 + 2 eps T (3 + delta log2 n)", "all trials", 120.0);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const double log_n = std::log2(100.0);
    for (const auto& mg : mixing_graphs(seed)) {
        const double bound = 1.0 + 2.0 * mg.eps * static_cast<double>(mg.tau) * (3.0 + log_n) + 1e-9;
        for (int j = 0; j < 20; ++j) {
            auto reset = random_rank(rng, 100, uniform_size(rng, 1, 100));
            auto p = pagerank(mg.graph, reset, mg.eps);
            auto report = distortion(p, mg.graph, {1.0}, mg.ref);
            double worst = 0.0;
            for (const auto& row : report.per_vertex) {
                worst = std::max(worst, row.contraction);
            }
            r.expect_at_most(worst, bound, "T=" + std::to_string(mg.tau));
        }
    }
    r.finish_all();
    return r;
}

/// Every PageRank is close to the reference rank in total variation.
inline SuiteResult suite_tv_bound(std::uint64_t seed)
{
    auto r = open_suite("tv-bound", "TV(pagerank(R), ref) <= eps tau(R) (3 + H(ref))", "all trials", 120.0);
    Rng rng(seed ^ 0x7f4a7c159e3779b9ULL);
    for (const auto& mg : mixing_graphs(seed)) {
        const double h = entropy(mg.ref);
        for (int j = 0; j < 20; ++j) {
            // The bound is 0 when tau(R) = 0, so resets already within 1/4 of
            // the reference rank are redrawn.
            RankVector reset;
            std::size_t tau_r = 0;
            do {
                reset = random_rank(rng, 100, uniform_size(rng, 1, 3));
                tau_r = mixing_time(mg.graph, MixingQuery{0.25, FromDistribution{reset}}, mg.ref);
            } while (tau_r == 0);
            auto p = pagerank(mg.graph, reset, mg.eps);
            const double bound = mg.eps * static_cast<double>(tau_r) * (3.0 + h) + 1e-9;
            r.expect_at_most(tv_distance(p, mg.ref), bound, "tau(R)=" + std::to_string(tau_r));
        }
    }
    r.finish_all();
    return r;
}

/// Min-PPR over centers drawn from the reference rank has low distortion.
inline SuiteResult suite_minppr_distortion(std::uint64_t seed)
{
    auto r = open_suite("minppr-distortion", "D_1(min_ppr) <= 1 + 210 eps tau log2 n for random centers",
        ">= 90/100 trials", 300.0);
    Rng rng(seed);
    const std::size_t n = 200, k = 6;
    auto g = random_ergodic_graph(n, 5, rng());
    auto ref = reference_rank(g);
    const double tau = static_cast<double>(mixing_time(g, ref));
    const double log_n = std::log2(static_cast<double>(n));
    const double eps = 0.5 / (210.0 * tau * log_n);
    const double bound = 1.0 + 210.0 * eps * tau * log_n;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<VertexId> draws;
        for (std::size_t i = 0; i < k; ++i) {
            draws.push_back(sample_vertex(rng, ref));
        }
        auto centers = make_vertex_set(draws, n);
        auto m = min_ppr(g, centers, eps);
        r.expect_at_most(distortion(m, g, {1.0}, ref).graph_distortion, bound, "|K|=" + std::to_string(centers.size()));
    }
    r.finish(90);
    return r;
}

/// The truncated walk series agrees with the power iteration.
inline SuiteResult suite_series_oracle(std::uint64_t seed)
{
    auto r = open_suite("series-oracle", "||pagerank - series(h)||_1 <= 1e-8 at h = ceil(ln 1e-10 / ln(1-eps))",
        "all trials", 30.0);
    Rng rng(seed);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = uniform_size(rng, 2, 40);
        auto g = random_graph(rng, n);
        auto reset = random_rank(rng, n, uniform_size(rng, 1, n));
        const double eps = uniform_real(rng, 0.02, 0.9);
        const auto h = static_cast<std::size_t>(std::ceil(std::log(1e-10) / std::log1p(-eps)));
        ResetModel rm(reset, eps);
        auto p = pagerank(g, rm);
        auto series = pagerank_series_oracle(g, rm, h);
        r.expect_at_most(l1_distance(p.span(), series.span()), 1e-8, "eps=" + io_note(eps));
        // The forward map is invertible: eps comes back from (p, R).
        auto rec = recover_reset_probability(g, p, reset);
        if (rec.kind == RealizationKind::Unique) {
            r.expect_at_most(std::abs(*rec.eps - eps), 1e-8, "recovered eps");
        }
    }
    r.finish_all();
    return r;
}

/// PageRank is linear in the reset vector.
inline SuiteResult suite_linearity(std::uint64_t seed)
{
    auto r = open_suite("linearity", "||pi(R) - sum_x R[x] pi(x)||_inf <= 1e-9", "all trials", 30.0);
    Rng rng(seed);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = uniform_size(rng, 2, 20);
        auto g = random_graph(rng, n);
        auto reset = random_rank(rng, n, uniform_size(rng, 1, n));
        const double eps = uniform_real(rng, 0.02, 0.9);
        auto p = pagerank(g, reset, eps);
        std::vector<double> combo(n, 0.0);
        for (VertexId x = 0; x < n; ++x) {
            if (reset[x] == 0.0) {
                continue;
            }
            auto px = ppr(g, x, eps);
            for (std::size_t y = 0; y < n; ++y) {
                combo[y] += reset[x] * px[y];
            }
        }
        double worst = 0.0;
        for (std::size_t y = 0; y < n; ++y) {
            worst = std::max(worst, std::abs(p[y] - combo[y]));
        }
        r.expect_at_most(worst, 1e-9, "n=" + std::to_string(n));
    }
    r.finish_all();
    return r;
}

/// T-Min-PPR and T-PPR resist randomized attacks on fast-mixing cliques.
inline SuiteResult suite_minppr_spam(std::uint64_t seed)
{
    auto r = open_suite("minppr-spam", "ratio(minppr_cost) >= eps/(3k) and ratio(ppr_cost) >= eps on cliques", "all trials", 120.0);
    Rng rng(seed);
    const double eps = 0.03;
    const std::size_t k = 3;
    const double min_bound = eps / (3.0 * static_cast<double>(k)) - 1e-9;
    const double ppr_bound = eps - 1e-9;
    for (int attack = 0; attack < 50; ++attack) {
        const std::size_t n = attack % 2 == 0 ? 50 : 100;
        auto g = clique(n);
        if (attack < 2) {
            // Precondition of the resistance theorem, checked once per size.
            auto ref = reference_rank(g);
            const double tau = static_cast<double>(mixing_time(g, ref));
            r.expect_at_most(tau, 1.0 / (3.0 * eps * (3.0 + std::log2(static_cast<double>(n)))),
                "mixing precondition n=" + std::to_string(n));
        }
        auto trusted = random_subset(rng, n, uniform_size(rng, 1, 6));
        VertexSet untrusted;
        for (VertexId v = 0; v < n; ++v) {
            if (!contains(trusted, v)) {
                untrusted.push_back(v);
            }
        }
        SpamScenario scenario;
        std::string kind;
        switch (attack % 3) {
        case 0: {
            kind = "self-loop";
            const VertexId p = untrusted[uniform_size(rng, 0, untrusted.size() - 1)];
            std::vector<Edge> edges;
            for (const auto& e : g.edges(false)) {
                if (e.first != p) {
                    edges.push_back(e);
                }
            }
            edges.emplace_back(p, p);
            scenario = {g, trusted, {p}, build_graph(n, edges)};
            break;
        }
        case 1: {
            kind = "sink-farm";
            const VertexId v = untrusted[uniform_size(rng, 0, untrusted.size() - 1)];
            scenario = attack_sink_farm(g, trusted, v, uniform_size(rng, 1, 200));
            break;
        }
        default: {
            kind = "rewire";
            VertexSet bought;
            for (VertexId i : random_subset(rng, untrusted.size(), uniform_size(rng, 1, 10))) {
                bought.push_back(untrusted[i]);
            }
            scenario = attack_random_rewire(g, trusted, bought, uniform_size(rng, 0, 30), 4,
                std::bernoulli_distribution(0.5)(rng) ? 0.3 : 0.0, rng);
            break;
        }
        }
        auto min_cost = minppr_cost(g, trusted, k, eps);
        auto min_ratio = spam_ratio(scenario, min_cost, TMinPPR{k}, eps);
        r.expect_at_least(min_ratio.value_or(INFINITY), min_bound, "T-Min-PPR " + kind);
        auto single_cost = ppr_cost(g, trusted, eps);
        auto single_ratio = spam_ratio(scenario, single_cost, TPPR{}, eps);
        r.expect_at_least(single_ratio.value_or(INFINITY), ppr_bound, "T-PPR " + kind);
    }
    r.finish_all();
    return r;
}

/// A spammer who owns P gains at most pi_G[A \ P] + pi_G[P]/eps on A ∪ S.
inline SuiteResult suite_spammer_bound(std::uint64_t seed)
{
    auto r = open_suite("spammer-bound", "pi_H[A ∪ S] <= pi_G[A \\ P] + pi_G[P]/eps", "all trials", 60.0);
    Rng rng(seed);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = uniform_size(rng, 3, 30);
        auto g = random_graph(rng, n);
        auto purchased = random_subset(rng, n, uniform_size(rng, 0, n / 2));
        VertexSet rest;
        for (VertexId v = 0; v < n; ++v) {
            if (!contains(purchased, v)) {
                rest.push_back(v);
            }
        }
        const double eps = uniform_real(rng, 0.05, 0.9);
        auto reset = random_rank_on(rng, n, rest);
        auto scenario = attack_random_rewire(g, {}, purchased, uniform_size(rng, 0, 10), 4, 0.3, rng);
        const auto& h = scenario.spam_graph;
        std::vector<double> lifted(reset.values());
        lifted.resize(h.size(), 0.0);
        auto pi_g = pagerank(g, reset, eps);
        auto pi_h = pagerank(h, RankVector(std::move(lifted)), eps);

        auto a = random_subset(rng, n, uniform_size(rng, 0, n));
        VertexSet a_and_s = a;
        for (VertexId s : scenario.spam_nodes()) {
            a_and_s.push_back(s);
        }
        VertexSet a_minus_p;
        for (VertexId v : a) {
            if (!contains(purchased, v)) {
                a_minus_p.push_back(v);
            }
        }
        const double bound = pi_g.mass(a_minus_p) + pi_g.mass(purchased) / eps + 1e-9;
        r.expect_at_most(pi_h.mass(a_and_s), bound, "|P|=" + std::to_string(purchased.size()));
    }
    r.finish_all();
    return r;
}

/// Without trust, a free copy of the graph captures half of UPR.
inline SuiteResult suite_zero_resistance(std::uint64_t seed)
{
    auto r = open_suite("zero-resistance", "duplicate attack gains 1/2 under UPR at zero cost", "all trials", 1.0);
    Rng rng(seed);
    const double eps = 0.15;
    auto g = random_ergodic_graph(30, 3, rng());
    auto scenario = attack_duplicate(g, {0});
    r.expect_true(validate_spam_graph(scenario.base, scenario.trusted, scenario.purchased, scenario.spam_graph),
        "duplicate attack is admissible");
    const double gain = spam_gain(scenario, UPR{}, eps);
    r.expect_at_most(std::abs(gain - 0.5), 1e-12, "UPR gain");
    auto cost = ppr_cost(g, scenario.trusted, eps);
    r.expect_at_most(cost.of(scenario.purchased), 0.0, "attack cost");
    auto ratio = spam_ratio(scenario, cost, UPR{}, eps);
    r.expect_at_most(ratio.value_or(INFINITY), 0.0, "spam ratio");
    r.finish_all();
    return r;
}

/// Median-filtered T-Min-PPR with centers drawn from the reference rank.
inline SuiteResult suite_hard_distortion(std::uint64_t seed)
{
    auto r = open_suite("hard-distortion", "D_delta(T-Min-PPR hard) <= 1 + 40 gamma delta log2 n + 2 n^(1-delta)",
        ">= 90/100 trials", 300.0);
    Rng rng(seed);
    const std::size_t n = 200, k = 4;
    const double delta = 1.5;
    auto g = random_ergodic_graph(n, 5, rng());
    auto ref = reference_rank(g);
    const double emt = expected_mixing_time(g, ref, 0.25, ref);
    const double log_n = std::log2(static_cast<double>(n));
    const double gamma = 1.0 / (20.0 * (10.0 + delta * log_n));
    const double eps = gamma / (8.0 * emt);
    const double bound = 1.0 + 40.0 * gamma * delta * log_n + 2.0 * std::pow(static_cast<double>(n), 1.0 - delta);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<VertexId> draws;
        for (std::size_t i = 0; i < 2 * k - 1; ++i) {
            draws.push_back(sample_vertex(rng, ref));
        }
        auto result = t_min_ppr_hard(g, make_vertex_set(draws, n), gamma, delta, k, eps);
        r.expect_at_most(distortion(result.rank, g, {delta}, ref).graph_distortion, bound,
            "kept=" + std::to_string(result.report.used.size()));
    }
    r.finish(90);
    return r;
}

/// Relay paths inflate UPR at the target vertex.
inline SuiteResult suite_inflation(std::uint64_t seed)
{
    auto r = open_suite("inflation", "UPR[v] grows with the number of u->w->v relays", "all trials", 10.0);
    Rng rng(seed);
    const double eps = 0.1;
    auto g = random_ergodic_graph(40, 3, rng());
    const VertexId u = 1;
    const VertexId v = g.out(u)[0] == u ? g.out(u)[1] : g.out(u)[0];
    double previous = pagerank(g, RankVector::uniform(g.size()), eps)[v];
    for (std::size_t m : {1, 4, 16, 64, 256}) {
        auto h = path_inflation(g, {u, v}, m);
        const double upr = pagerank(h, RankVector::uniform(h.size()), eps)[v];
        r.expect_at_least(upr, previous, "m=" + std::to_string(m));
        previous = upr;
    }
    r.finish_all();
    return r;
}

// --- registry -----------------------------------------------------------------------

struct SuiteEntry {
    std::string name;
    std::function<SuiteResult(std::uint64_t)> run;
    std::vector<std::string> operations; // public operations the suite exercises
};

inline const std::vector<SuiteEntry>& suites()
{
    static const std::vector<SuiteEntry> registry = {
        {"min-closure", suite_min_closure,
            {"random_ergodic_graph", "build_graph", "is_ergodic", "is_coherent", "min_ppr", "min_rank", "pagerank", "invert_reset"}},
        {"median-failure", suite_median_failure,
            {"median_counterexample", "pagerank", "median_rank", "invert_reset", "is_pagerank_at", "is_pagerank"}},
        {"clique-tightness", suite_clique_tightness,
            {"clique", "ppr_cost", "attack_clique_selfloop", "validate_spam_graph", "spam_gain", "spam_ratio", "t_ppr"}},
        {"upr-distortion", suite_upr_distortion,
            {"upr_bad_family", "reference_rank", "pagerank", "distortion", "mixing_time", "walk_distribution"}},
        {"contraction-bound", suite_contraction_bound,
            {"random_ergodic_graph", "reference_rank", "mixing_time", "pagerank", "distortion"}},
        {"tv-bound", suite_tv_bound, {"random_ergodic_graph", "mixing_time", "pagerank", "tv_distance", "entropy"}},
        {"minppr-distortion", suite_minppr_distortion, {"reference_rank", "mixing_time", "min_ppr", "distortion"}},
        {"series-oracle", suite_series_oracle,
            {"pagerank", "pagerank_series_oracle", "recover_reset_probability"}},
        {"linearity", suite_linearity, {"pagerank"}},
        {"minppr-spam", suite_minppr_spam,
            {"clique", "minppr_cost", "ppr_cost", "t_min_ppr", "max_coherent_subset", "t_ppr", "attack_sink_farm",
                "spam_gain", "spam_ratio", "validate_spam_graph"}},
        {"spammer-bound", suite_spammer_bound, {"pagerank", "validate_spam_graph"}},
        {"zero-resistance", suite_zero_resistance,
            {"attack_duplicate", "validate_spam_graph", "spam_gain", "spam_ratio", "ppr_cost"}},
        {"hard-distortion", suite_hard_distortion,
            {"expected_mixing_time", "t_min_ppr_hard", "max_coherent_subset", "distortion"}},
        {"inflation", suite_inflation, {"path_inflation", "pagerank"}},
    };
    return registry;
}

/// Every public operation of the library, for the coverage check of `--suite all`.
inline const std::vector<std::string>& public_operations()
{
    static const std::vector<std::string> ops = {"build_graph", "is_ergodic", "is_coherent", "max_coherent_subset",
        "walk_distribution", "reference_rank", "pagerank", "pagerank_series_oracle", "invert_reset", "is_pagerank_at",
        "is_pagerank", "recover_reset_probability", "min_rank", "median_rank", "min_ppr", "t_ppr", "t_min_ppr",
        "t_min_ppr_hard", "tv_distance", "mixing_time", "expected_mixing_time", "distortion", "entropy",
        "validate_spam_graph", "ppr_cost", "minppr_cost", "spam_gain", "spam_ratio", "attack_clique_selfloop",
        "attack_duplicate", "attack_sink_farm", "clique", "upr_bad_family", "median_counterexample", "path_inflation",
        "random_ergodic_graph"};
    return ops;
}

inline SuiteResult run_suite(const std::string& name, std::uint64_t seed)
{
    for (const auto& entry : suites()) {
        if (entry.name == name) {
            return entry.run(seed);
        }
    }
    throw Error(ErrorCode::UnknownSuite, "no suite named '" + name + "'");
}

} // namespace minppr::harness
