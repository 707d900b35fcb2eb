#include "fanouh/fano.hpp"

#include <algorithm>
#include <numeric>

namespace fanouh {

namespace {

std::array<Point, 3> sorted(Point a, Point b, Point c)
{
    std::array<Point, 3> pts{a, b, c};
    std::sort(pts.begin(), pts.end());
    return pts;
}

int find_line(Point a, Point b, Point c)
{
    const auto pts = sorted(a, b, c);
    for (int j = 0; j < 7; ++j) {
        if (all_lines()[j].points() == pts) {
            return j;
        }
    }
    return -1;
}

std::string triple_string(Point a, Point b, Point c)
{
    return "{" + std::to_string(a.value()) + "," + std::to_string(b.value()) + "," +
           std::to_string(c.value()) + "}";
}

} // namespace

Line::Line(Point a, Point b, Point c) : points_(sorted(a, b, c))
{
    if (find_line(a, b, c) < 0) {
        throw NotALine(triple_string(a, b, c) + " is not a line of the Fano plane");
    }
}

bool Line::contains(Point p) const
{
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

std::string Line::to_string() const
{
    return triple_string(points_[0], points_[1], points_[2]);
}

OrderedLine::OrderedLine(Point first, Point second, Point third) : seq_{first, second, third}
{
    if (!is_line(first, second, third)) {
        throw NotALine(triple_string(first, second, third) + " is not a line of the Fano plane");
    }
}

Line line(Point j)
{
    return Line(Line::Unchecked{}, sorted(j + 1, j + 2, j + 4));
}

const std::array<Line, 7>& all_lines()
{
    static const std::array<Line, 7> lines = [] {
        return std::array<Line, 7>{line(Point(0)), line(Point(1)), line(Point(2)), line(Point(3)),
                                   line(Point(4)), line(Point(5)), line(Point(6))};
    }();
    return lines;
}

bool is_line(Point a, Point b, Point c)
{
    return find_line(a, b, c) >= 0;
}

Point line_index(Point a, Point b, Point c)
{
    const int j = find_line(a, b, c);
    if (j < 0) {
        throw NotALine(triple_string(a, b, c) + " is not a line of the Fano plane");
    }
    return Point(j);
}

Point line_index(const Line& l)
{
    const auto& p = l.points();
    return line_index(p[0], p[1], p[2]);
}

Point third_point(Point p, Point q)
{
    if (p == q) {
        throw DegeneratePair("third_point needs two distinct points, got " +
                             std::to_string(p.value()) + " twice");
    }
    for (const auto& l : all_lines()) {
        if (l.contains(p) && l.contains(q)) {
            for (Point r : l.points()) {
                if (r != p && r != q) {
                    return r;
                }
            }
        }
    }
    // Unreachable: any two distinct points span a line.
    throw DegeneratePair("no line through the given points");
}

std::array<Line, 3> lines_through(Point p)
{
    std::array<Line, 3> out{all_lines()[0], all_lines()[0], all_lines()[0]};
    std::size_t k = 0;
    for (const auto& l : all_lines()) {
        if (l.contains(p)) {
            out[k++] = l;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::array<Line, 4> lines_avoiding(Point p)
{
    std::array<Line, 4> out{all_lines()[0], all_lines()[0], all_lines()[0], all_lines()[0]};
    std::size_t k = 0;
    for (const auto& l : all_lines()) {
        if (!l.contains(p)) {
            out[k++] = l;
        }
    }
    return out;
}

Collineation::Collineation(std::array<Point, 7> map) : map_(map)
{
    std::array<bool, 7> seen{};
    for (Point p : map_) {
        if (seen[p.value()]) {
            throw NotALine("collineation map is not a bijection");
        }
        seen[p.value()] = true;
    }
    for (const auto& l : all_lines()) {
        const auto& q = l.points();
        if (!is_line(map_[q[0].value()], map_[q[1].value()], map_[q[2].value()])) {
            throw NotALine("point map sends line " + l.to_string() + " to a non-line");
        }
    }
}

Collineation Collineation::identity()
{
    return translation(0);
}

Collineation Collineation::translation(int t)
{
    std::array<Point, 7> m;
    for (int j = 0; j < 7; ++j) {
        m[j] = Point(j + t);
    }
    return Collineation(m);
}

Collineation Collineation::scaling(int k)
{
    std::array<Point, 7> m;
    for (int j = 0; j < 7; ++j) {
        m[j] = Point(k * j);
    }
    return Collineation(m);
}

Line Collineation::operator()(const Line& l) const
{
    const auto& p = l.points();
    return Line((*this)(p[0]), (*this)(p[1]), (*this)(p[2]));
}

Collineation Collineation::then(const Collineation& next) const
{
    std::array<Point, 7> m;
    for (int j = 0; j < 7; ++j) {
        m[j] = next(map_[j]);
    }
    return Collineation(m);
}

Collineation Collineation::inverse() const
{
    std::array<Point, 7> m;
    for (int j = 0; j < 7; ++j) {
        m[map_[j].value()] = Point(j);
    }
    return Collineation(m);
}

const std::vector<Collineation>& collineations()
{
    static const std::vector<Collineation> group = [] {
        std::vector<Collineation> out;
        std::array<int, 7> perm;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool preserves = true;
            for (const auto& l : all_lines()) {
                const auto& q = l.points();
                if (!is_line(Point(perm[q[0].value()]), Point(perm[q[1].value()]),
                             Point(perm[q[2].value()]))) {
                    preserves = false;
                    break;
                }
            }
            if (preserves) {
                std::array<Point, 7> m;
                for (int j = 0; j < 7; ++j) {
                    m[j] = Point(perm[j]);
                }
                out.emplace_back(m);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }();
    return group;
}

} // namespace fanouh
