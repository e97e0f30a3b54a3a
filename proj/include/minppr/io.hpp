#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
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

namespace minppr::io {

using json = nlohmann::json;

/// 17 significant digits, enough to round-trip any double.
inline std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string format_array(const std::vector<double>& values)
{
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += format_double(values[i]);
    }
    out += "]";
    return out;
}

// --- edge lists -----------------------------------------------------------

/**
 * Reads "n m" followed by m lines "u v". Lines starting with '#' and blank
 * lines are skipped. The sink convention is applied on load.
 */
inline DirectedGraph read_edge_list(std::istream& in)
{
    std::string line;
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        long long a = 0, b = 0;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0) {
            throw Error(ErrorCode::ParseError, "malformed line " + std::to_string(line_no) + ": '" + line + "'");
        }
        if (!header) {
            header.emplace(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        } else {
            edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
        }
    }
    if (!header) {
        throw Error(ErrorCode::ParseError, "missing 'n m' header");
    }
    if (edges.size() != header->second) {
        throw Error(ErrorCode::ParseError,
            "header declares " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
    }
    return build_graph(header->first, edges);
}

inline DirectedGraph read_edge_list(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    }
    return read_edge_list(in);
}

/// Writes the explicit edges only; implicit sink loops are re-derived on load.
inline void write_edge_list(std::ostream& out, const DirectedGraph& g)
{
    auto edges = g.edges(false);
    out << g.size() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) {
        out << u << ' ' << v << '\n';
    }
}

inline void write_edge_list(const std::filesystem::path& path, const DirectedGraph& g)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    }
    write_edge_list(out, g);
}

// --- rank files -------------------------------------------------------------

inline json selection_to_json(const HardSelectionReport& report)
{
    json divergences = json::array();
    for (const auto& [c, xi] : report.divergences) {
        divergences.push_back({{"center", c}, {"xi", xi}});
    }
    return {
        {"medians", report.medians},
        {"divergences", divergences},
        {"kept", report.kept},
        {"discarded", report.discarded},
        {"used", report.used},
        {"gamma", report.gamma},
        {"delta", report.delta},
        {"threshold_empty", report.threshold_empty},
    };
}

/// {"n": int, "eps": float|null, "rank": [...]} with 17-digit floats. The
/// optional selection report of the median-filtered variant rides along.
inline std::string rank_to_json(const RankVector& rank, std::optional<double> eps,
    const std::optional<HardSelectionReport>& selection = std::nullopt)
{
    std::string out = "{\"n\": " + std::to_string(rank.size());
    out += ", \"eps\": " + (eps ? format_double(*eps) : std::string("null"));
    out += ", \"rank\": " + format_array(rank.values());
    if (selection) {
        // nlohmann prints shortest round-trip doubles; the report is diagnostic only.
        out += ", \"selection\": " + selection_to_json(*selection).dump();
    }
    out += "}\n";
    return out;
}

struct RankFile {
    RankVector rank;
    std::optional<double> eps;
};

inline RankFile rank_from_json(const std::string& text)
{
    try {
        auto doc = json::parse(text);
        auto values = doc.at("rank").get<std::vector<double>>();
        if (doc.at("n").get<std::size_t>() != values.size()) {
            throw Error(ErrorCode::ParseError, "rank length does not match n");
        }
        std::optional<double> eps;
        if (!doc.at("eps").is_null()) {
            eps = doc.at("eps").get<double>();
        }
        return {RankVector(std::move(values)), eps};
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

// --- distortion -------------------------------------------------------------

inline std::string distortion_to_csv(const DistortionReport& report)
{
    std::string out = "vertex,stretch,contraction,distortion\n";
    for (const auto& row : report.per_vertex) {
        out += std::to_string(row.vertex) + ',' + format_double(row.stretch) + ',' + format_double(row.contraction)
            + ',' + format_double(row.distortion) + '\n';
    }
    return out;
}

inline json distortion_summary(const DistortionReport& report)
{
    return {
        {"n", report.per_vertex.size()},
        {"delta", report.delta},
        {"graph_distortion", report.graph_distortion},
        {"worst_vertex", report.worst_vertex},
    };
}

// --- generator sidecar --------------------------------------------------------

inline json spec_to_json(const GeneratorSpec& spec)
{
    return std::visit(
        [](const auto& f) -> json {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, GeneratorSpec::Clique>) {
                return {{"family", "clique"}, {"n", f.n}};
            } else if constexpr (std::is_same_v<F, GeneratorSpec::Cycle>) {
                return {{"family", "cycle"}, {"n", f.n}};
            } else if constexpr (std::is_same_v<F, GeneratorSpec::UprBad>) {
                return {{"family", "uprbad"}, {"k", f.k}};
            } else if constexpr (std::is_same_v<F, GeneratorSpec::MedianX>) {
                return {{"family", "median"}, {"ell", f.ell}};
            } else if constexpr (std::is_same_v<F, GeneratorSpec::RandomErgodic>) {
                return {{"family", "random"}, {"n", f.n}, {"d", f.d}, {"seed", f.seed}};
            } else {
                return {{"family", "inflate"}, {"base", spec_to_json(f.base.at(0))},
                    {"edge", {f.edge.first, f.edge.second}}, {"m", f.m}};
            }
        },
        spec.family);
}

inline GeneratorSpec spec_from_json(const json& doc)
{
    try {
        const auto family = doc.at("family").get<std::string>();
        if (family == "clique") {
            return {GeneratorSpec::Clique{doc.at("n").get<std::size_t>()}};
        }
        if (family == "cycle") {
            return {GeneratorSpec::Cycle{doc.at("n").get<std::size_t>()}};
        }
        if (family == "uprbad") {
            return {GeneratorSpec::UprBad{doc.at("k").get<std::size_t>()}};
        }
        if (family == "median") {
            return {GeneratorSpec::MedianX{doc.at("ell").get<std::size_t>()}};
        }
        if (family == "random") {
            return {GeneratorSpec::RandomErgodic{
                doc.at("n").get<std::size_t>(), doc.at("d").get<std::size_t>(), doc.at("seed").get<std::uint64_t>()}};
        }
        if (family == "inflate") {
            auto edge = doc.at("edge").get<std::vector<VertexId>>();
            if (edge.size() != 2) {
                throw Error(ErrorCode::ParseError, "inflate edge must have two endpoints");
            }
            GeneratorSpec::PathInflation f{{spec_from_json(doc.at("base"))}, {edge[0], edge[1]}, doc.at("m").get<std::size_t>()};
            return {std::move(f)};
        }
        throw Error(ErrorCode::ParseError, "unknown family '" + family + "'");
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

// --- spam scenarios -----------------------------------------------------------

/**
 * Scenario file: {"base": path, "trusted": [...], "purchased": [...],
 * "spam_graph": path}. Relative paths resolve against the scenario file.
 * Admissibility is checked before returning.
 */
inline SpamScenario read_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    auto resolve = [&](const std::string& p) {
        std::filesystem::path rel(p);
        return rel.is_absolute() ? rel : path.parent_path() / rel;
    };
    try {
        SpamScenario s;
        s.base = read_edge_list(resolve(doc.at("base").get<std::string>()));
        s.spam_graph = read_edge_list(resolve(doc.at("spam_graph").get<std::string>()));
        s.trusted = make_vertex_set(doc.at("trusted").get<std::vector<VertexId>>(), s.base.size());
        s.purchased = make_vertex_set(doc.value("purchased", std::vector<VertexId>{}), s.base.size());
        validate(s);
        return s;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

} // namespace minppr::io
