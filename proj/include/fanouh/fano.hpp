#ifndef FANOUH_FANO_HPP
#define FANOUH_FANO_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fanouh/error.hpp"

namespace fanouh {

/// A point of the Fano plane, identified with a residue mod 7.
class Point {
public:
    constexpr Point() = default;
    constexpr explicit Point(int v) : value_(static_cast<std::uint8_t>(((v % 7) + 7) % 7)) {}

    constexpr int value() const { return value_; }

    friend constexpr Point operator+(Point p, int t) { return Point(p.value_ + t); }
    friend constexpr Point operator*(int k, Point p) { return Point(k * p.value_); }
    friend constexpr auto operator<=>(Point, Point) = default;

private:
    std::uint8_t value_ = 0;
};

/// An unordered line, stored sorted ascending.
class Line {
public:
    /// Throws NotALine unless {a,b,c} is one of the seven lines.
    Line(Point a, Point b, Point c);

    const std::array<Point, 3>& points() const { return points_; }
    bool contains(Point p) const;
    std::string to_string() const;

    friend auto operator<=>(const Line&, const Line&) = default;

private:
    struct Unchecked {};
    Line(Unchecked, std::array<Point, 3> pts) : points_(pts) {}
    friend Line line(Point j);

    std::array<Point, 3> points_;
};

/// A line together with a reading order of its three points.
class OrderedLine {
public:
    OrderedLine(Point first, Point second, Point third);

    const std::array<Point, 3>& seq() const { return seq_; }
    Point operator[](std::size_t k) const { return seq_[k]; }
    Line line() const { return Line(seq_[0], seq_[1], seq_[2]); }

    friend auto operator<=>(const OrderedLine&, const OrderedLine&) = default;

private:
    std::array<Point, 3> seq_;
};

/// The line {j+1, j+2, j+4}.
Line line(Point j);

bool is_line(Point a, Point b, Point c);

/// Inverse of line(); throws NotALine when the points do not form a line.
Point line_index(Point a, Point b, Point c);
Point line_index(const Line& l);

/// The third point on the line through p and q. Throws DegeneratePair if p == q.
Point third_point(Point p, Point q);

const std::array<Line, 7>& all_lines();
/// Sorted ascending.
std::array<Line, 3> lines_through(Point p);
/// In order of line index.
std::array<Line, 4> lines_avoiding(Point p);

/// A permutation of the seven points that maps lines onto lines.
class Collineation {
public:
    /// Throws NotALine if the map is not a bijection preserving lines.
    explicit Collineation(std::array<Point, 7> map);

    static Collineation identity();
    static Collineation translation(int t);
    static Collineation scaling(int k);

    Point operator()(Point p) const { return map_[p.value()]; }
    Line operator()(const Line& l) const;
    const std::array<Point, 7>& map() const { return map_; }

    Collineation then(const Collineation& next) const;
    Collineation inverse() const;

    friend auto operator<=>(const Collineation&, const Collineation&) = default;

private:
    std::array<Point, 7> map_;
};

/// All 168 collineations, in lexicographic order of their point maps.
const std::vector<Collineation>& collineations();

} // namespace fanouh

#endif
