#include <doctest.h>

#include <algorithm>
#include <set>

#include "fanouh/autos.hpp"
#include "fanouh/dgraph.hpp"
#include "fanouh/voltage.hpp"

using namespace fanouh;

namespace {

VertexId id(const char* s) { return static_cast<VertexId>(vertex_index(parse_compact(s))); }

} // namespace

TEST_CASE("Z7 action is free and an automorphism")
{
    const auto& d = d_graph();
    const auto a = z7_action();
    CHECK_NOTHROW(validate_action(d, a));
    CHECK(orbits(std::vector<Permutation>{a.generator}, d.size()).size() == 24);
    CHECK_THROWS_AS(validate_action(d, {Permutation::identity(168)}), InvalidAction);
    CHECK_THROWS_AS(validate_action(d, {Permutation::identity(5)}), InvalidAction);
    CHECK_THROWS_AS(validate_action(d.retargeted(0, 0, 1), a), InvalidAction);

    // Order 7 but with fixed points.
    std::vector<VertexId> img(168);
    for (int i = 0; i < 168; ++i) {
        img[static_cast<std::size_t>(i)] = i;
    }
    for (int i = 0; i < 7; ++i) {
        img[static_cast<std::size_t>(i)] = (i + 1) % 7;
    }
    CHECK_THROWS_AS(validate_action(d, {Permutation(img)}), InvalidAction);
}

TEST_CASE("quotient")
{
    const auto& d = d_graph();
    const auto v = quotient(d, z7_action());
    CHECK(v.reps.size() == 24);
    CHECK(v.arcs.size() == 72);
    for (std::size_t r = 0; r < 24; ++r) {
        CHECK(v.out_degree(r) == 3);
        CHECK(v.in_degree(r) == 3);
        CHECK(vertex_at(static_cast<std::size_t>(v.reps[r])).x() == Point(0));
    }
    const auto first = std::find_if(v.arcs.begin(), v.arcs.end(),
                                    [&](const VoltageArc& a) { return a.from == static_cast<std::size_t>(id("124_0")); });
    REQUIRE(first != v.arcs.end());
    CHECK(first->label == 1);
    CHECK(first->voltage == 3);
    const auto& rep = vertex_at(static_cast<std::size_t>(v.reps[first->to]));
    CHECK(compact_string(rep) == "532_0");
    CHECK(compact_string(translate(rep, first->voltage)) == "165_3");
    CHECK_THROWS_AS(quotient(Digraph(10), z7_action()), InvalidAction);
}

TEST_CASE("derive(quotient(D)) == D")
{
    const auto& d = d_graph();
    const auto v = quotient(d, z7_action());
    const auto lifted = derive(v);
    CHECK(lifted.size() == 168);
    CHECK(lifted.arc_count() == 504);
    CHECK(lifted == d);
}

TEST_CASE("a voltage-1 loop lifts to a directed 7-cycle")
{
    VoltageGraph v;
    v.reps = {1000};
    v.arcs = {{0, 0, 1, 1}};
    const auto lifted = derive(v);
    CHECK(lifted.size() == 7);
    CHECK(lifted.arc_count() == 7);
    CHECK(strongly_connected(lifted));
    const auto p = label_map(lifted, 0);
    REQUIRE(p.has_value());
    CHECK(cycles_of(*p).size() == 1);
}

TEST_CASE("a voltage-0 loop lifts to seven loops")
{
    VoltageGraph v;
    v.reps = {1000};
    v.arcs = {{0, 0, 0, 1}};
    const auto lifted = derive(v);
    CHECK(strong_component_count(lifted) == 7);
}

TEST_CASE("cycle orbits")
{
    const auto& d = d_graph();
    const auto count = cycle_orbit_count(d, z7_action());
    CHECK(count.orbits == 18);
    CHECK(count.sizes == std::vector<std::size_t>(18, 7));

    const OrientedCycle4 c({id("253_0"), id("241_6"), id("235_0"), id("214_6")});
    const auto t = z7_action().generator;
    const OrientedCycle4 c1({t(c[0]), t(c[1]), t(c[2]), t(c[3])});
    CHECK(c1.is_cycle_of(d));
    CHECK_FALSE(c1 == c);
}

TEST_CASE("every 4-cycle has net voltage zero")
{
    const auto& d = d_graph();
    const auto v = quotient(d, z7_action());
    for (const auto& c : enumerate_4cycles(d)) {
        CHECK(net_voltage(v, d, c) == 0);
    }
}
