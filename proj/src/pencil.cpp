#include "fanouh/pencil.hpp"

#include <algorithm>
#include <cctype>

namespace fanouh {

namespace {

std::array<Point, 3> derive_c(Point x, const OrderedLine& b)
{
    std::array<Point, 3> c;
    for (std::size_t k = 0; k < 3; ++k) {
        c[k] = third_point(x, b[k]);
    }
    return c;
}

int key_of(Point x, const OrderedLine& b)
{
    return ((x.value() * 7 + b[0].value()) * 7 + b[1].value()) * 7 + b[2].value();
}

struct VertexTable {
    std::vector<DVertex> vertices;
    std::array<int, 7 * 7 * 7 * 7> index{};
};

const VertexTable& table()
{
    static const VertexTable t = [] {
        VertexTable out;
        out.index.fill(-1);
        for (int x = 0; x < 7; ++x) {
            std::vector<OrderedLine> ordered;
            for (const Line& l : lines_avoiding(Point(x))) {
                auto p = l.points();
                do {
                    ordered.emplace_back(p[0], p[1], p[2]);
                } while (std::next_permutation(p.begin(), p.end()));
            }
            std::sort(ordered.begin(), ordered.end());
            for (const auto& b : ordered) {
                out.index[key_of(Point(x), b)] = static_cast<int>(out.vertices.size());
                out.vertices.emplace_back(Point(x), b);
            }
        }
        return out;
    }();
    return t;
}

Point digit(char ch, std::string_view text)
{
    if (ch < '0' || ch > '6') {
        throw ParseError("expected a digit 0-6 in '" + std::string(text) + "'");
    }
    return Point(ch - '0');
}

} // namespace

DVertex::DVertex(Point x, OrderedLine b) : x_(x), b_(b)
{
    if (b_.line().contains(x_)) {
        throw NotALine("base point " + std::to_string(x_.value()) + " lies on " +
                       b_.line().to_string());
    }
    c_ = derive_c(x_, b_);
}

std::string CompactSymbol::to_string() const
{
    std::string s;
    for (Point q : {y, u, p}) {
        s += static_cast<char>('0' + q.value());
    }
    s += '_';
    s += static_cast<char>('0' + x.value());
    return s;
}

std::string RowColSymbol::to_string() const
{
    std::string s = std::to_string(j.value()) + "_" + row;
    if (shift.value() != 0) {
        s += "+" + std::to_string(shift.value());
    }
    return s;
}

const std::vector<DVertex>& enumerate_vertices()
{
    return table().vertices;
}

std::size_t vertex_index(const DVertex& v)
{
    return static_cast<std::size_t>(table().index[key_of(v.x(), v.b())]);
}

const DVertex& vertex_at(std::size_t index)
{
    return table().vertices.at(index);
}

DVertex decode_long(int x, int b1c1, int b2c2, int b0c0)
{
    const Point base(x);
    std::array<Point, 3> b;
    std::array<Point, 3> c;
    const std::array<int, 3> pairs{b1c1, b2c2, b0c0};
    for (std::size_t k = 0; k < 3; ++k) {
        if (x < 0 || x > 6 || pairs[k] < 0 || pairs[k] > 66 || pairs[k] / 10 > 6 || pairs[k] % 10 > 6) {
            throw ParseError("pencil entries must be digit pairs over 0-6");
        }
        b[k] = Point(pairs[k] / 10);
        c[k] = Point(pairs[k] % 10);
        if (base == b[k] || base == c[k] || b[k] == c[k] || !is_line(base, b[k], c[k])) {
            throw InconsistentPencil("entry " + std::to_string(pairs[k]) + " does not complete a line through " +
                                     std::to_string(x));
        }
    }
    return DVertex(base, OrderedLine(b[0], b[1], b[2]));
}

DVertex parse_long(std::string_view text)
{
    std::string compacted;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            compacted += ch;
        }
    }
    // (x,ab,ab,ab)
    if (compacted.size() != 12 || compacted.front() != '(' || compacted.back() != ')' || compacted[2] != ',' ||
        compacted[5] != ',' || compacted[8] != ',') {
        throw ParseError("expected (x,b1c1,b2c2,b0c0), got '" + std::string(text) + "'");
    }
    auto two = [&](std::size_t at) {
        return digit(compacted[at], text).value() * 10 + digit(compacted[at + 1], text).value();
    };
    return decode_long(digit(compacted[1], text).value(), two(3), two(6), two(9));
}

std::string to_long(const DVertex& v)
{
    std::string s = "(" + std::to_string(v.x().value());
    for (std::size_t k = 0; k < 3; ++k) {
        s += ',';
        s += static_cast<char>('0' + v.b()[k].value());
        s += static_cast<char>('0' + v.c()[k].value());
    }
    return s + ")";
}

CompactSymbol compact(const DVertex& v)
{
    return {v.b()[0], v.b()[1], v.b()[2], v.x()};
}

std::string compact_string(const DVertex& v)
{
    return compact(v).to_string();
}

DVertex from_compact(const CompactSymbol& s)
{
    return DVertex(s.x, OrderedLine(s.y, s.u, s.p));
}

DVertex parse_compact(std::string_view text)
{
    if (text.size() != 5 || text[3] != '_') {
        throw ParseError("expected yup_x, got '" + std::string(text) + "'");
    }
    return from_compact({digit(text[0], text), digit(text[1], text), digit(text[2], text), digit(text[4], text)});
}

RowColSymbol rowcol(const DVertex& v)
{
    const DVertex rep = translate(v, -v.x().value());
    const Line l = rep.b().line();
    auto p = l.points();
    int rank = 0;
    do {
        if (p == rep.b().seq()) {
            break;
        }
        ++rank;
    } while (std::next_permutation(p.begin(), p.end()));
    return {line_index(l), static_cast<char>('a' + rank), v.x()};
}

DVertex translate(const DVertex& v, int t)
{
    return apply(Collineation::translation(t), v);
}

DVertex apply(const Collineation& g, const DVertex& v)
{
    return DVertex(g(v.x()), OrderedLine(g(v.b()[0]), g(v.b()[1]), g(v.b()[2])));
}

} // namespace fanouh
