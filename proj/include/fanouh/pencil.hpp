#ifndef FANOUH_PENCIL_HPP
#define FANOUH_PENCIL_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fanouh/fano.hpp"

namespace fanouh {

/// Arc/entry labels i take the values 1, 2, 0 and cycle in that order,
/// so successor and predecessor are plain arithmetic mod 3.
using Label = int;

inline constexpr std::array<Label, 3> kLabelOrder{1, 2, 0};

constexpr Label next_label(Label i) { return (i + 1) % 3; }
constexpr Label prev_label(Label i) { return (i + 2) % 3; }

/// Storage slot of label i within a (b1, b2, b0) triple.
constexpr std::size_t slot(Label i) { return static_cast<std::size_t>((i + 2) % 3); }

/// An ordered pencil of ordered lines at base point x, i.e. the vertex
/// (x, b1c1, b2c2, b0c0) of D. Determined by x and the ordered line (b1,b2,b0)
/// avoiding x; each c_i is the third point on the line through x and b_i.
class DVertex {
public:
    /// Throws NotALine if x lies on b.
    DVertex(Point x, OrderedLine b);

    Point x() const { return x_; }
    const OrderedLine& b() const { return b_; }
    Point b(Label i) const { return b_[slot(i)]; }
    Point c(Label i) const { return c_[slot(i)]; }
    const std::array<Point, 3>& c() const { return c_; }

    friend bool operator==(const DVertex& l, const DVertex& r) { return l.x_ == r.x_ && l.b_ == r.b_; }
    friend auto operator<=>(const DVertex& l, const DVertex& r)
    {
        if (auto cmp = l.x_ <=> r.x_; cmp != 0) {
            return cmp;
        }
        return l.b_ <=> r.b_;
    }

private:
    Point x_;
    OrderedLine b_;
    std::array<Point, 3> c_;
};

/// "yup_x" notation.
struct CompactSymbol {
    Point y, u, p, x;

    std::string to_string() const;
    friend auto operator<=>(const CompactSymbol&, const CompactSymbol&) = default;
};

/// "j_i" notation of the x = 0 representatives; `shift` is the translation
/// carrying the representative to the vertex.
struct RowColSymbol {
    Point j;
    char row = 'a';
    Point shift;

    std::string to_string() const;
    friend auto operator<=>(const RowColSymbol&, const RowColSymbol&) = default;
};

inline constexpr std::size_t kVertexCount = 168;

/// All 168 vertices, ascending by x then lexicographically by (b1,b2,b0).
/// Positions in this list are the canonical vertex indices.
const std::vector<DVertex>& enumerate_vertices();
std::size_t vertex_index(const DVertex& v);
const DVertex& vertex_at(std::size_t index);

/// Builds a vertex from the long form (x, b1c1, b2c2, b0c0), each pair given
/// as a two-digit number. Throws InconsistentPencil or NotALine.
DVertex decode_long(int x, int b1c1, int b2c2, int b0c0);

/// Parses "(x,b1c1,b2c2,b0c0)"; whitespace is tolerated. Throws ParseError.
DVertex parse_long(std::string_view text);
std::string to_long(const DVertex& v);

CompactSymbol compact(const DVertex& v);
std::string compact_string(const DVertex& v);
/// Parses "yup_x". Throws ParseError on malformed input, NotALine otherwise.
DVertex parse_compact(std::string_view text);
DVertex from_compact(const CompactSymbol& s);

RowColSymbol rowcol(const DVertex& v);

DVertex translate(const DVertex& v, int t);
DVertex apply(const Collineation& g, const DVertex& v);

} // namespace fanouh

#endif
