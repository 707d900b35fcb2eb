#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fanouh/dgraph.hpp"
#include "fanouh/golden.hpp"

using namespace fanouh;

namespace {

bool names_vertex(const std::string& s)
{
    try {
        parse_compact(s);
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

TEST_CASE("published sub-list shape")
{
    const auto& rows = published_sublist();
    REQUIRE(rows.size() == 24);
    CHECK(format_row(rows.front()) == "124_0 : 165_3, 325_6, 364_5");
    std::set<std::string> heads;
    for (const auto& r : rows) {
        heads.insert(r.vertex);
        CHECK(r.vertex.ends_with("_0"));
        CHECK(names_vertex(r.vertex));
    }
    CHECK(heads.size() == 24);
    const auto it = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.vertex == "253_0"; });
    REQUIRE(it != rows.end());
    CHECK(format_row(*it) == "253_0 : 241_6, 651_4, 643_6");
}

TEST_CASE("errata are exactly the published non-vertices")
{
    std::set<std::pair<std::string, std::size_t>> bad;
    for (const auto& r : published_sublist()) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (!names_vertex(r.successors[k])) {
                bad.insert({r.vertex, k});
            }
        }
    }
    std::set<std::pair<std::string, std::size_t>> listed;
    for (const auto& e : sublist_errata()) {
        listed.insert({e.vertex, e.position});
        CHECK_FALSE(names_vertex(e.published));
        CHECK(names_vertex(e.corrected));
        CHECK(e.published.substr(0, 3) == e.corrected.substr(0, 3));
    }
    CHECK(bad.size() == 6);
    CHECK(listed == bad);
}

TEST_CASE("generated rows match the corrected table")
{
    const auto& d = d_graph();
    const auto r = golden_sublist_check(d);
    CHECK(r.pass);
    CHECK(r.diffs.empty());
    const auto gen = generated_sublist(d);
    const auto fixed = corrected_sublist();
    REQUIRE(gen.size() == fixed.size());
    for (std::size_t i = 0; i < gen.size(); ++i) {
        CHECK(format_row(gen[i]) == format_row(fixed[i]));
    }
}

TEST_CASE("verbatim table differs only at the errata")
{
    const auto r = verbatim_sublist_check(d_graph());
    CHECK_FALSE(r.pass);
    REQUIRE(r.diffs.size() == sublist_errata().size());
    for (std::size_t i = 0; i < r.diffs.size(); ++i) {
        const auto& e = sublist_errata()[i];
        CHECK(r.diffs[i].vertex == e.vertex);
        CHECK(r.diffs[i].position == e.position);
        CHECK(r.diffs[i].expected == e.published);
        CHECK(r.diffs[i].got == e.corrected);
    }
}

TEST_CASE("corrections commute with j -> 2j")
{
    const auto g = Collineation::scaling(2);
    std::map<std::string, SublistRow> by_head;
    for (const auto& r : corrected_sublist()) {
        by_head[r.vertex] = r;
    }
    for (const auto& r : corrected_sublist()) {
        const auto head = compact_string(apply(g, parse_compact(r.vertex)));
        REQUIRE(by_head.count(head));
        std::set<std::string> mapped;
        for (const auto& s : r.successors) {
            mapped.insert(compact_string(apply(g, parse_compact(s))));
        }
        const auto& target = by_head[head].successors;
        CHECK(mapped == std::set<std::string>(target.begin(), target.end()));
    }
}

TEST_CASE("a retargeted arc gives a one-entry diff")
{
    const auto& d = d_graph();
    const auto bad = d.retargeted(0, 1, d.out(5)[0]);
    const auto r = golden_sublist_check(bad);
    CHECK_FALSE(r.pass);
    REQUIRE(r.diffs.size() == 1);
    CHECK(r.diffs[0].vertex == "124_0");
    CHECK(r.diffs[0].position == 1);
    CHECK(r.diffs[0].expected == "325_6");
}
