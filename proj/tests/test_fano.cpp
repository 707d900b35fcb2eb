#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "fanouh/fano.hpp"

using namespace fanouh;

namespace {

Line L(int a, int b, int c) { return Line(Point(a), Point(b), Point(c)); }

// Independent oracle: lines as difference-set translates {1,2,4} + j, scanned by brute force.
bool brute_is_line(int a, int b, int c)
{
    for (int j = 0; j < 7; ++j) {
        std::set<int> l{(j + 1) % 7, (j + 2) % 7, (j + 4) % 7};
        if (l == std::set<int>{a, b, c}) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("line(j) evaluates the difference set")
{
    CHECK(line(Point(0)) == L(1, 2, 4));
    CHECK(line(Point(6)) == L(0, 1, 3));
    for (int j = 0; j < 7; ++j) {
        CHECK_FALSE(line(Point(j)).contains(Point(j)));
    }
}

TEST_CASE("Line constructor rejects non-lines")
{
    CHECK_THROWS_AS(L(0, 1, 2), NotALine);
    CHECK_THROWS_AS(L(1, 1, 2), NotALine);
    CHECK_NOTHROW(L(4, 2, 1));
    CHECK(L(4, 2, 1).to_string() == "{1,2,4}");
}

TEST_CASE("is_line agrees with brute scan on every triple")
{
    int count = 0;
    for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
            for (int c = 0; c < 7; ++c) {
                const bool expected = a != b && b != c && a != c && brute_is_line(a, b, c);
                CHECK(is_line(Point(a), Point(b), Point(c)) == expected);
                count += expected ? 1 : 0;
            }
        }
    }
    CHECK(count == 7 * 6);
}

TEST_CASE("line_index")
{
    CHECK(line_index(Point(1), Point(2), Point(4)) == Point(0));
    CHECK(line_index(Point(2), Point(3), Point(5)) == Point(1));
    CHECK(line_index(Point(0), Point(2), Point(6)) == Point(5));
    CHECK_THROWS_AS(line_index(Point(0), Point(1), Point(2)), NotALine);
    for (int j = 0; j < 7; ++j) {
        CHECK(line_index(line(Point(j))) == Point(j));
    }
}

TEST_CASE("third_point")
{
    CHECK(third_point(Point(0), Point(2)) == Point(6));
    CHECK(third_point(Point(0), Point(1)) == Point(3));
    CHECK_THROWS_AS(third_point(Point(3), Point(3)), DegeneratePair);
    for (int p = 0; p < 7; ++p) {
        for (int q = 0; q < 7; ++q) {
            if (p != q) {
                const Point r = third_point(Point(p), Point(q));
                CHECK(is_line(Point(p), Point(q), r));
                CHECK(third_point(Point(q), Point(p)) == r);
            }
        }
    }
}

TEST_CASE("pencils and anti-pencils")
{
    const auto avoid = lines_avoiding(Point(0));
    CHECK(avoid == std::array<Line, 4>{L(1, 2, 4), L(2, 3, 5), L(3, 4, 6), L(1, 5, 6)});
    const auto through = lines_through(Point(0));
    CHECK(through == std::array<Line, 3>{L(0, 1, 3), L(0, 2, 6), L(0, 4, 5)});
    for (int p = 0; p < 7; ++p) {
        for (const auto& l : lines_through(Point(p))) {
            CHECK(l.contains(Point(p)));
        }
        for (const auto& l : lines_avoiding(Point(p))) {
            CHECK_FALSE(l.contains(Point(p)));
        }
    }
}

TEST_CASE("two lines meet in exactly one point")
{
    for (const auto& l : all_lines()) {
        for (const auto& m : all_lines()) {
            int common = 0;
            for (Point p : l.points()) {
                common += m.contains(p) ? 1 : 0;
            }
            CHECK(common == (l == m ? 3 : 1));
        }
    }
}

TEST_CASE("collineations form a group of order 168")
{
    const auto& g = collineations();
    REQUIRE(g.size() == 168);
    CHECK(std::is_sorted(g.begin(), g.end()));
    CHECK(std::binary_search(g.begin(), g.end(), Collineation::identity()));
    CHECK(std::binary_search(g.begin(), g.end(), Collineation::scaling(2)));
    for (int t = 0; t < 7; ++t) {
        CHECK(std::binary_search(g.begin(), g.end(), Collineation::translation(t)));
    }
    for (std::size_t i = 0; i < g.size(); i += 7) {
        CHECK(g[i].then(g[i].inverse()) == Collineation::identity());
        for (std::size_t j = 0; j < g.size(); j += 11) {
            CHECK(std::binary_search(g.begin(), g.end(), g[i].then(g[j])));
        }
    }
}

TEST_CASE("collineations map lines to lines")
{
    for (const auto& g : collineations()) {
        std::set<Line> image;
        for (const auto& l : all_lines()) {
            image.insert(g(l));
        }
        CHECK(image.size() == 7);
    }
}

TEST_CASE("Collineation rejects a non-collineation")
{
    std::array<Point, 7> swap01{};
    for (int i = 0; i < 7; ++i) {
        swap01[static_cast<std::size_t>(i)] = Point(i);
    }
    std::swap(swap01[0], swap01[1]);
    CHECK_THROWS_AS(Collineation{swap01}, NotALine);
    CHECK_THROWS_AS(Collineation::scaling(0), NotALine);
    CHECK_THROWS_AS(Collineation::scaling(3), NotALine);
}
