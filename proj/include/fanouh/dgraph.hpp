#ifndef FANOUH_DGRAPH_HPP
#define FANOUH_DGRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fanouh/digraph.hpp"
#include "fanouh/pencil.hpp"

namespace fanouh {

/// The label i for which u -> v satisfies the arc rule, if any:
///   x = c'_i, x' = c_i, b'_i = b_i, b'_{i+1} = c_{i+1}, b'_{i-1} = c_{i-1},
///   c'_{i+1} = b_{i-1}, c'_{i-1} = b_{i+1}.
std::optional<Label> arc_label(const DVertex& u, const DVertex& v);

/// The unique out-neighbor of u along label i.
DVertex step(const DVertex& u, Label i);

/// D on the canonical vertex indices; out-lists in label order 1, 2, 0.
Digraph build_d();

/// Same digraph, memoized.
const Digraph& d_graph();

/// Directed 4-cycle, rotated so the smallest vertex index comes first.
class OrientedCycle4 {
public:
    /// Canonicalizes the rotation; throws std::invalid_argument on repeated vertices.
    explicit OrientedCycle4(std::array<VertexId, 4> walk);

    const std::array<VertexId, 4>& vertices() const { return vertices_; }
    VertexId operator[](std::size_t k) const { return vertices_[k % 4]; }
    bool is_cycle_of(const Digraph& d) const;
    std::string to_string() const;

    friend auto operator<=>(const OrientedCycle4&, const OrientedCycle4&) = default;

private:
    std::array<VertexId, 4> vertices_;
};

/// Generic census: depth-first search from each vertex through larger indices only.
std::vector<OrientedCycle4> enumerate_4cycles(const Digraph& d);

/// Vertex map v -> (position-k out-neighbor of v); nullopt if it is not a
/// permutation or some vertex has fewer than k+1 out-arcs.
std::optional<Permutation> label_map(const Digraph& d, std::size_t position);

/// Census via the orbits of the three label maps. Fails (returns an error string)
/// when a label map is not a permutation or has an orbit of length other than 4.
std::variant<std::vector<OrientedCycle4>, std::string> cycles_from_label_orbits(const Digraph& d);

/// A directed closed walk of length 2 or 3 on distinct vertices.
struct ShortCircuit {
    std::vector<VertexId> vertices;
};

std::optional<ShortCircuit> find_short_circuit(const Digraph& d);
inline bool check_no_short_circuits(const Digraph& d) { return !find_short_circuit(d).has_value(); }

/// Orbits of a permutation, each starting at its smallest element.
std::vector<std::vector<VertexId>> cycles_of(const Permutation& p);

} // namespace fanouh

#endif
