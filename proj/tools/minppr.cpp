// minppr command-line front end: rank, distortion, mixing, spam, gen, verify.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minppr/minppr.hpp"

namespace {

using namespace minppr;
using json = nlohmann::json;

std::vector<VertexId> parse_ids(const std::string& csv, const std::string& flag)
{
    std::vector<VertexId> ids;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0) {
                throw std::invalid_argument(item);
            }
            ids.push_back(static_cast<VertexId>(v));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, flag + ": bad vertex id '" + item + "'");
        }
    }
    return ids;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::ParseError, "cannot write " + path);
    }
    out << text;
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RankOptions {
    std::string graph;
    std::string algo = "reference";
    double eps = 0.1;
    std::string centers;
    std::string trusted;
    std::size_t k = 1;
    double delta = 1.5;
    double gamma = 0.05;
};

void add_rank_flags(CLI::App* cmd, RankOptions& o, bool required_graph = true)
{
    auto* g = cmd->add_option("--graph", o.graph, "edge-list file");
    if (required_graph) {
        g->required();
    }
    cmd->add_option("--algo", o.algo, "ranking algorithm")
        ->check(CLI::IsMember({"reference", "upr", "ppr", "minppr", "tppr", "tminppr", "tminppr-hard"}));
    cmd->add_option("--eps", o.eps, "reset probability");
    cmd->add_option("--centers", o.centers, "comma-separated center ids");
    cmd->add_option("--trusted", o.trusted, "comma-separated trusted ids");
    cmd->add_option("--k", o.k, "number of centers for the trusted variants");
    cmd->add_option("--delta", o.delta, "significance exponent");
    cmd->add_option("--gamma", o.gamma, "hard-variant accuracy parameter");
}

struct Ranked {
    RankVector rank;
    std::optional<double> eps;
    std::optional<HardSelectionReport> selection;
};

Ranked compute_rank(const DirectedGraph& g, const RankOptions& o)
{
    const std::size_t n = g.size();
    if (o.algo == "reference") {
        return {reference_rank(g), std::nullopt, std::nullopt};
    }
    if (o.algo == "upr") {
        return {pagerank(g, RankVector::uniform(n), o.eps), o.eps, std::nullopt};
    }
    if (o.algo == "ppr" || o.algo == "minppr") {
        auto centers = make_vertex_set(parse_ids(o.centers, "--centers"), n);
        if (centers.empty()) {
            throw Error(ErrorCode::EmptyInput, "--centers is required for --algo " + o.algo);
        }
        if (o.algo == "ppr") {
            if (centers.size() != 1) {
                throw Error(ErrorCode::BadParams, "--algo ppr takes exactly one center");
            }
            return {ppr(g, centers.front(), o.eps), o.eps, std::nullopt};
        }
        return {min_ppr(g, centers, o.eps), o.eps, std::nullopt};
    }
    auto trusted = make_vertex_set(parse_ids(o.trusted, "--trusted"), n);
    if (o.algo == "tppr") {
        return {t_ppr(g, trusted, o.eps), o.eps, std::nullopt};
    }
    if (o.algo == "tminppr") {
        return {t_min_ppr(g, trusted, o.k, o.eps), o.eps, std::nullopt};
    }
    auto hard = t_min_ppr_hard(g, trusted, o.gamma, o.delta, o.k, o.eps);
    return {std::move(hard.rank), o.eps, std::move(hard.report)};
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& out)
{
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& entry : harness::suites()) {
            names.push_back(entry.name);
        }
    } else {
        names.push_back(suite);
    }
    json results = json::array();
    bool ok = true;
    for (const auto& name : names) {
        auto result = harness::run_suite(name, seed);
        ok = ok && result.verdict;
        std::cerr << (result.verdict ? "PASS " : "FAIL ") << name << " " << result.passed << "/" << result.trials
                  << "\n";
        results.push_back(harness::to_json(result));
    }
    json doc = {{"seed", seed}, {"suites", results}};
    if (suite == "all") {
        std::set<std::string> covered;
        for (const auto& entry : harness::suites()) {
            covered.insert(entry.operations.begin(), entry.operations.end());
        }
        json missing = json::array();
        for (const auto& op : harness::public_operations()) {
            if (!covered.count(op)) {
                missing.push_back(op);
            }
        }
        doc["uncovered_operations"] = missing;
        ok = ok && missing.empty();
    }
    write_text(out, doc.dump(2) + "\n");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rankings built from personalized PageRank, with spam and distortion analysis"};
    app.require_subcommand(1);

    RankOptions rank_opts;
    std::string out;
    auto* rank_cmd = app.add_subcommand("rank", "compute a ranking and write it as JSON");
    add_rank_flags(rank_cmd, rank_opts);
    rank_cmd->add_option("--out", out, "output path (default stdout)");

    RankOptions dist_opts;
    std::string rank_file;
    auto* dist_cmd = app.add_subcommand("distortion", "per-vertex distortion against the reference rank");
    add_rank_flags(dist_cmd, dist_opts);
    dist_cmd->add_option("--rank", rank_file, "rank JSON to evaluate (otherwise computed with --algo)");
    dist_cmd->add_option("--out", out, "CSV output path; the summary goes to <out>.json")->required();

    std::string mix_graph;
    double rho = 0.25;
    std::optional<VertexId> mix_vertex;
    auto* mix_cmd = app.add_subcommand("mixing", "mixing times of the uniform random walk");
    mix_cmd->add_option("--graph", mix_graph, "edge-list file")->required();
    mix_cmd->add_option("--rho", rho, "TV target");
    mix_cmd->add_option("--vertex", mix_vertex, "report a single start vertex");
    mix_cmd->add_option("--out", out, "output path (default stdout)");

    std::string scenario_path, spam_algo = "tppr", cost_name;
    double spam_eps = 0.1;
    std::size_t spam_k = 3;
    auto* spam_cmd = app.add_subcommand("spam", "evaluate an attack scenario");
    spam_cmd->add_option("--scenario", scenario_path, "scenario JSON")->required();
    spam_cmd->add_option("--algo", spam_algo, "ranking under attack")
        ->check(CLI::IsMember({"tppr", "tminppr", "upr"}));
    spam_cmd->add_option("--cost", cost_name, "cost function (default matches --algo)")
        ->check(CLI::IsMember({"ppr", "minppr"}));
    spam_cmd->add_option("--eps", spam_eps, "reset probability");
    spam_cmd->add_option("--k", spam_k, "number of centers for tminppr");
    spam_cmd->add_option("--out", out, "output path (default stdout)");

    std::string family, edge_csv, base_path;
    std::size_t gen_n = 0, gen_k = 0, gen_ell = 0, gen_d = 0, gen_m = 0;
    std::uint64_t gen_seed = 0;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph family; writes <out> and a <out>.json sidecar");
    gen_cmd->add_option("--family", family, "graph family")
        ->required()
        ->check(CLI::IsMember({"clique", "cycle", "uprbad", "median", "random", "inflate"}));
    gen_cmd->add_option("--n", gen_n, "vertex count");
    gen_cmd->add_option("--k", gen_k, "uprbad size parameter");
    gen_cmd->add_option("--ell", gen_ell, "median counterexample parameter");
    gen_cmd->add_option("--d", gen_d, "random out-degree");
    gen_cmd->add_option("--seed", gen_seed, "random seed");
    gen_cmd->add_option("--base", base_path, "inflate: sidecar JSON of the base graph");
    gen_cmd->add_option("--edge", edge_csv, "inflate: edge u,v to replace");
    gen_cmd->add_option("--m", gen_m, "inflate: number of relays");
    gen_cmd->add_option("--out", out, "edge-list output path")->required();

    std::string suite = "all";
    std::uint64_t verify_seed = 7;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");
    verify_cmd->add_option("--seed", verify_seed, "seed for all random draws");
    verify_cmd->add_option("--out", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*rank_cmd) {
            auto g = io::read_edge_list(rank_opts.graph);
            auto r = compute_rank(g, rank_opts);
            write_text(out, io::rank_to_json(r.rank, r.eps, r.selection));
        } else if (*dist_cmd) {
            auto g = io::read_edge_list(dist_opts.graph);
            auto x = rank_file.empty() ? compute_rank(g, dist_opts).rank : io::rank_from_json(read_text(rank_file)).rank;
            auto report = distortion(x, g, {dist_opts.delta}, reference_rank(g));
            write_text(out, io::distortion_to_csv(report));
            write_text(out + ".json", io::distortion_summary(report).dump(2) + "\n");
        } else if (*mix_cmd) {
            auto g = io::read_edge_list(mix_graph);
            auto ref = reference_rank(g);
            json doc = {{"n", g.size()}, {"rho", rho}};
            if (mix_vertex) {
                doc["vertex"] = *mix_vertex;
                doc["mixing_time"] = mixing_time(g, MixingQuery{rho, FromVertex{*mix_vertex}}, ref);
            } else {
                auto times = vertex_mixing_times(g, ref, rho);
                doc["mixing_time"] = times.empty() ? 0 : *std::max_element(times.begin(), times.end());
                doc["per_vertex"] = times;
            }
            write_text(out, doc.dump(2) + "\n");
        } else if (*spam_cmd) {
            auto scenario = io::read_scenario(scenario_path);
            RankingAlgorithm algo = UPR{};
            if (spam_algo == "tppr") {
                algo = TPPR{};
            } else if (spam_algo == "tminppr") {
                algo = TMinPPR{spam_k};
            }
            if (cost_name.empty()) {
                cost_name = spam_algo == "tminppr" ? "minppr" : "ppr";
            }
            auto cost = cost_name == "minppr" ? minppr_cost(scenario.base, scenario.trusted, spam_k, spam_eps)
                                              : ppr_cost(scenario.base, scenario.trusted, spam_eps);
            const double gain = spam_gain(scenario, algo, spam_eps);
            auto ratio = spam_ratio(scenario, cost, algo, spam_eps);
            json doc = {{"algo", spam_algo}, {"cost_function", cost_name}, {"eps", spam_eps},
                {"cost", cost.of(scenario.purchased)}, {"gain", gain}, {"spam_nodes", scenario.spam_nodes().size()}};
            doc["ratio"] = ratio ? json(*ratio) : json(nullptr);
            doc["unbounded"] = !ratio.has_value();
            write_text(out, doc.dump(2) + "\n");
        } else if (*gen_cmd) {
            GeneratorSpec spec;
            if (family == "clique") {
                spec.family = GeneratorSpec::Clique{gen_n};
            } else if (family == "cycle") {
                spec.family = GeneratorSpec::Cycle{gen_n};
            } else if (family == "uprbad") {
                spec.family = GeneratorSpec::UprBad{gen_k};
            } else if (family == "median") {
                spec.family = GeneratorSpec::MedianX{gen_ell};
            } else if (family == "random") {
                spec.family = GeneratorSpec::RandomErgodic{gen_n, gen_d, gen_seed};
            } else {
                if (base_path.empty()) {
                    throw Error(ErrorCode::BadParams, "--base is required for --family inflate");
                }
                auto endpoints = parse_ids(edge_csv, "--edge");
                if (endpoints.size() != 2) {
                    throw Error(ErrorCode::BadParams, "--edge takes exactly two ids, e.g. --edge 0,1");
                }
                auto base = io::spec_from_json(json::parse(read_text(base_path)));
                spec.family = GeneratorSpec::PathInflation{{base}, {endpoints[0], endpoints[1]}, gen_m};
            }
            auto g = generate(spec);
            io::write_edge_list(out, g);
            write_text(out + ".json", io::spec_to_json(spec).dump(2) + "\n");
        } else if (*verify_cmd) {
            return run_verify(suite, verify_seed, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_computational(e.code()) ? 2 : 1;
    } catch (const json::exception& e) {
        std::cerr << "error [ParseError]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
