#ifndef FANOUH_COXETER_HPP
#define FANOUH_COXETER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanouh/digraph.hpp"
#include "fanouh/fano.hpp"
#include "fanouh/pencil.hpp"

namespace fanouh {

/// Unordered pencil [x, b1c1, b2c2, b0c0] of ordered lines at x whose second
/// coordinates {b1, b2, b0} form a line. Entries are kept ascending by b.
class CoxVertex {
public:
    /// Throws NotALine if x lies on `seconds`.
    CoxVertex(Point x, Line seconds);

    Point x() const { return x_; }
    const Line& seconds() const { return seconds_; }
    /// (b, c) pairs, ascending by b.
    std::array<std::pair<Point, Point>, 3> entries() const;
    std::string to_string() const;

    friend auto operator<=>(const CoxVertex&, const CoxVertex&) = default;

private:
    Point x_;
    Line seconds_;
};

/// All 28 vertices, ordered by (x, line index of the second coordinates).
const std::vector<CoxVertex>& cox_vertices();
std::size_t cox_index(const CoxVertex& v);

/// Forgets the order of the pencil.
CoxVertex unordered(const DVertex& v);
CoxVertex translate(const CoxVertex& v, int t);

/// True iff the entries of P and Q can be aligned so that each aligned pair of
/// entries meets in exactly one point d_k, the d_k form a line, one aligned pair
/// is the common edge (b_k = b'_k, c_k = x', c'_k = x), and in every other
/// aligned pair the common point is c_k = b'_k.
bool cox_adjacent(const CoxVertex& p, const CoxVertex& q);

Graph build_coxeter();

/// Length and one witness of a shortest cycle; nullopt for forests.
std::optional<std::vector<VertexId>> shortest_cycle(const Graph& g);
bool connected(const Graph& g);
/// nullopt if disconnected.
std::optional<int> diameter(const Graph& g);

struct IntersectionArray {
    std::vector<int> b; // b_0 .. b_{d-1}
    std::vector<int> c; // c_1 .. c_d

    std::string to_string() const;
    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// nullopt unless g is connected and distance-regular.
std::optional<IntersectionArray> intersection_array(const Graph& g);

struct ValidationEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    int girth = 0;
    int diameter = -1;
    std::uint64_t aut_order = 0;
    std::vector<VertexId> girth_witness;

    bool pass() const;
};

/// 3-regular, connected, girth 7, intersection array {3,2,2,1;1,1,1,2},
/// |Aut| = 336 and a single vertex orbit.
ValidationReport validate_coxeter(const Graph& g);

} // namespace fanouh

#endif
