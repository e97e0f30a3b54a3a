#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "minppr/io.hpp"

using namespace minppr;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name)
{
    auto dir = fs::temp_directory_path() / ("minppr_io_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::BadParams;
}

} // namespace

TEST(EdgeList, ParsesCommentsAndSinks)
{
    std::istringstream in("# a comment\n3 2\n\n0 1\n  # indented comment\n1 2\n");
    auto g = io::read_edge_list(in);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 2}}));
}

TEST(EdgeList, RoundTripKeepsImplicitLoopsImplicit)
{
    auto g = build_graph(4, {{0, 1}, {1, 0}, {2, 2}, {1, 3}});
    std::ostringstream out;
    io::write_edge_list(out, g);
    EXPECT_EQ(out.str(), "4 4\n0 1\n1 0\n1 3\n2 2\n");
    std::istringstream in(out.str());
    EXPECT_EQ(io::read_edge_list(in), g);
}

TEST(EdgeList, Errors)
{
    std::istringstream bad_line("2 1\n0 x\n");
    EXPECT_EQ(code_of([&] { io::read_edge_list(bad_line); }), ErrorCode::ParseError);
    std::istringstream short_list("3 2\n0 1\n");
    EXPECT_EQ(code_of([&] { io::read_edge_list(short_list); }), ErrorCode::ParseError);
    std::istringstream out_of_range("2 1\n0 5\n");
    EXPECT_EQ(code_of([&] { io::read_edge_list(out_of_range); }), ErrorCode::IndexOutOfRange);
    std::istringstream empty("");
    EXPECT_EQ(code_of([&] { io::read_edge_list(empty); }), ErrorCode::ParseError);
}

TEST(RankJson, SeventeenDigitsRoundTrip)
{
    auto p = RankVector::normalized({1, 6});
    auto text = io::rank_to_json(p, 0.1);
    EXPECT_NE(text.find("0.14285714285714285"), std::string::npos);
    auto back = io::rank_from_json(text);
    EXPECT_EQ(back.rank, p);
    EXPECT_EQ(*back.eps, 0.1);
    auto reference = io::rank_from_json(io::rank_to_json(p, std::nullopt));
    EXPECT_FALSE(reference.eps.has_value());
    EXPECT_EQ(code_of([] { io::rank_from_json("{\"n\": 3, \"eps\": null, \"rank\": [0.5, 0.5]}"); }),
        ErrorCode::ParseError);
}

TEST(RankJson, SelectionReport)
{
    HardSelectionReport report;
    report.medians = {0.5, 0.5};
    report.divergences = {{0, 0.0}, {1, 0.25}};
    report.kept = {0};
    report.discarded = {1};
    report.used = {0};
    report.gamma = 0.1;
    report.delta = 2.0;
    auto doc = nlohmann::json::parse(io::rank_to_json(RankVector::uniform(2), 0.2, report));
    EXPECT_EQ(doc["selection"]["discarded"], nlohmann::json::array({1}));
    EXPECT_EQ(doc["selection"]["divergences"][1]["xi"], 0.25);
    EXPECT_EQ(doc["selection"]["gamma"], 0.1);
}

TEST(DistortionCsv, Format)
{
    DistortionReport r;
    r.delta = 1.0;
    r.per_vertex = {{0, 2.0, 0.5, 2.0}, {1, 1.0, 1.0, 1.0}};
    r.graph_distortion = 2.0;
    EXPECT_EQ(io::distortion_to_csv(r), "vertex,stretch,contraction,distortion\n0,2,0.5,2\n1,1,1,1\n");
    auto s = io::distortion_summary(r);
    EXPECT_EQ(s["graph_distortion"], 2.0);
    EXPECT_EQ(s["worst_vertex"], 0);
}

TEST(GeneratorSpecJson, RoundTrip)
{
    std::vector<GeneratorSpec> specs = {
        {GeneratorSpec::Clique{5}},
        {GeneratorSpec::Cycle{7}},
        {GeneratorSpec::UprBad{20}},
        {GeneratorSpec::MedianX{3}},
        {GeneratorSpec::RandomErgodic{100, 5, 12345678901234ULL}},
        {GeneratorSpec::PathInflation{{GeneratorSpec{GeneratorSpec::Cycle{3}}}, {0, 1}, 4}},
    };
    for (const auto& spec : specs) {
        auto back = io::spec_from_json(io::spec_to_json(spec));
        EXPECT_EQ(io::spec_to_json(back), io::spec_to_json(spec));
        EXPECT_EQ(generate(back), generate(spec));
    }
    EXPECT_EQ(code_of([] { io::spec_from_json({{"family", "torus"}}); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { io::spec_from_json({{"family", "clique"}}); }), ErrorCode::ParseError);
}

TEST(Scenario, ReadAndValidate)
{
    auto dir = scratch_dir("scenario");
    auto g = cycle(4);
    io::write_edge_list(dir / "g.el", g);
    auto s = attack_sink_farm(g, {0}, 2, 3);
    io::write_edge_list(dir / "h.el", s.spam_graph);
    {
        std::ofstream out(dir / "ok.json");
        out << R"({"base": "g.el", "spam_graph": "h.el", "trusted": [0], "purchased": [2]})";
    }
    auto read = io::read_scenario(dir / "ok.json");
    EXPECT_EQ(read.spam_graph, s.spam_graph);
    EXPECT_EQ(read.purchased, (VertexSet{2}));
    {
        std::ofstream out(dir / "bad.json");
        out << R"({"base": "g.el", "spam_graph": "h.el", "trusted": [0], "purchased": []})";
    }
    EXPECT_EQ(code_of([&] { io::read_scenario(dir / "bad.json"); }), ErrorCode::InvalidScenario);
    fs::remove_all(dir);
}
