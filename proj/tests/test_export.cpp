#include <doctest.h>

#include <json.hpp>

#include "fanouh/coxeter.hpp"
#include "fanouh/dgraph.hpp"
#include "fanouh/export.hpp"
#include "fanouh/voltage.hpp"

using namespace fanouh;
using nlohmann::json;

TEST_CASE("digraph JSON")
{
    const auto& d = d_graph();
    const auto cycles = enumerate_4cycles(d);
    const auto text = digraph_json(d, cycles);
    CHECK(text == digraph_json(build_d(), enumerate_4cycles(build_d())));
    const auto j = json::parse(text);
    CHECK(j.at("vertices").size() == 168);
    CHECK(j.at("arcs").size() == 504);
    CHECK(j.at("cycles").size() == 126);
    CHECK(j.at("vertices")[0] == "124_0");
    CHECK(j.at("arcs")[0] == json{{"from", "124_0"}, {"to", "165_3"}, {"label", 1}});
    CHECK(digraph_from_json(text) == d);
}

TEST_CASE("digraph JSON rejects malformed input")
{
    CHECK_THROWS_AS(digraph_from_json("{"), ParseError);
    CHECK_THROWS_AS(digraph_from_json(R"({"vertices":[],"arcs":[]})"), ParseError);
    CHECK_THROWS_AS(digraph_from_json(R"({"arcs":[]})"), ParseError);
}

TEST_CASE("digraph DOT")
{
    const auto dot = digraph_dot(d_graph());
    CHECK(dot.starts_with("digraph"));
    CHECK(dot.find("label=\"124_0\"") != std::string::npos);
    CHECK(dot == digraph_dot(build_d()));
    CHECK(vertex_name(d_graph(), 0) == "124_0");
    CHECK(vertex_name(Digraph(3), 2) == "2");
}

TEST_CASE("Coxeter export")
{
    const auto g = build_coxeter();
    const auto j = json::parse(coxeter_json(g));
    CHECK(j.at("vertices").size() == 28);
    CHECK(j.at("edges").size() == 42);
    CHECK(j.at("vertices")[0] == "[0,13,26,45]");
    CHECK(coxeter_dot(g).starts_with("graph"));
}

TEST_CASE("quotient JSON round trip")
{
    const auto v = quotient(d_graph(), z7_action());
    const auto text = quotient_json(v);
    const auto j = json::parse(text);
    CHECK(j.at("reps").size() == 24);
    CHECK(j.at("arcs").size() == 72);
    const auto back = quotient_from_json(text);
    CHECK(back.reps == v.reps);
    CHECK(back.arcs == v.arcs);
    CHECK(derive(back) == d_graph());
    CHECK(quotient_dot(v).find("label=\"3\"") != std::string::npos);
    CHECK_THROWS_AS(quotient_from_json(R"({"reps":["124_0"],"arcs":[{"from":"142_0","to":"124_0","voltage":1}]})"),
                    ParseError);
}

TEST_CASE("UH report JSON")
{
    UHReport r;
    r.pass = false;
    r.aut_order = 12;
    r.failures.push_back({OrientedCycle4({0, 1, 2, 3}), OrientedCycle4({4, 5, 6, 7}), 2});
    const auto j = json::parse(uh_report_json(r));
    CHECK(j.at("pass") == false);
    CHECK(j.at("aut_order") == 12);
    REQUIRE(j.at("failures").size() == 1);
    CHECK(j.at("failures")[0].at("rotation") == 2);
    CHECK(j.at("failures")[0].at("cycle").size() == 4);
}
