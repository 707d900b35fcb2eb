#ifndef FANOUH_AUTOS_HPP
#define FANOUH_AUTOS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fanouh/dgraph.hpp"
#include "fanouh/digraph.hpp"
#include "fanouh/fano.hpp"

namespace fanouh {

bool is_automorphism(const Permutation& sigma, const Digraph& d);

/// Vertex map of D induced by applying a collineation entrywise.
Permutation induced_automorphism(const Collineation& g);
Permutation translation_automorphism(int t);

/// Individualization-refinement engine over a fixed digraph. Colorings are
/// refined by iterating (in, out) colour profiles to a fixed point; the trace
/// hash records every split so that two branches can be compared cheaply.
class ColoredSearch {
public:
    struct State {
        std::vector<int> color;
        int cells = 0;
        std::uint64_t trace = 0;

        bool compatible(const State& other) const { return cells == other.cells && trace == other.trace; }
    };

    explicit ColoredSearch(const Digraph& d);

    const Digraph& graph() const { return *d_; }

    /// Refined unit coloring.
    State root() const;
    /// Gives v its own cell, then refines.
    State individualize(const State& s, VertexId v) const;
    bool discrete(const State& s) const { return s.cells == static_cast<int>(n_); }

    /// Smallest non-singleton cell (lowest colour on ties) and its smallest vertex.
    std::pair<int, VertexId> target(const State& s) const;

    /// An automorphism mapping every vertex of colour c in `left` to a vertex of
    /// colour c in `right`, found by backtracking; nullopt if none exists.
    std::optional<Permutation> search(const State& left, const State& right) const;

private:
    void refine(State& s) const;

    const Digraph* d_;
    std::size_t n_;
    std::vector<int> out_off_, out_adj_, in_off_, in_adj_;
};

/// Automorphism mapping prescribed[k].first to prescribed[k].second for all k.
std::optional<Permutation> find_automorphism(const Digraph& d,
                                             std::span<const std::pair<VertexId, VertexId>> prescribed);

struct AutGroupOptions {
    /// Vertices fixed pointwise; the result is their pointwise stabilizer.
    std::vector<VertexId> fixed;
    unsigned workers = 1;
    std::uint64_t enumerate_bound = 1'000'000;
};

class AutGroup {
public:
    AutGroup(std::size_t n, std::vector<Permutation> generators, std::uint64_t order);

    std::size_t degree() const { return n_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::uint64_t order() const { return order_; }
    /// Orbit sizes along the search base, whose product is the order.
    const std::vector<std::size_t>& base_orbit_sizes() const { return base_orbits_; }
    const std::vector<VertexId>& base() const { return base_; }

    /// All elements, filled by enumerate() when the order is within the bound.
    const std::optional<std::vector<Permutation>>& elements() const { return elements_; }
    void enumerate(std::uint64_t bound);

    std::vector<std::vector<VertexId>> vertex_orbits() const;

private:
    friend AutGroup automorphism_group(const Digraph&, const AutGroupOptions&);

    std::size_t n_;
    std::vector<Permutation> generators_;
    std::uint64_t order_;
    std::vector<VertexId> base_;
    std::vector<std::size_t> base_orbits_;
    std::optional<std::vector<Permutation>> elements_;
};

AutGroup automorphism_group(const Digraph& d, const AutGroupOptions& options = {});

std::vector<std::vector<VertexId>> orbits(std::span<const Permutation> generators, std::size_t n);

/// Orbits of the arcs of d under the group generated by `generators`, each sorted,
/// listed in order of their smallest arc.
std::vector<std::vector<Arc>> arc_orbits(std::span<const Permutation> generators, const Digraph& d);
std::vector<std::vector<Arc>> arc_orbits(const AutGroup& g, const Digraph& d);

/// Whether every generator maps each labelled arc onto an arc with the same label.
bool preserves_labels(std::span<const Permutation> generators, const Digraph& d);

/// A 4-cycle with a distinguished starting vertex; corresponds to the arc
/// (start, successor).
struct CycleFlag {
    OrientedCycle4 cycle;
    std::size_t start = 0;

    Arc arc(const Digraph& d) const;
};

/// Tries to extend the map C[k] -> C'[k + rotation] to an automorphism of d.
std::optional<Permutation> extend_isomorphism(const OrientedCycle4& c, const OrientedCycle4& c2, int rotation,
                                              const Digraph& d);

/// Extension search with per-(cycle, rotation) refinement states cached, for
/// checking many triples against the same digraph.
class CycleExtender {
public:
    CycleExtender(const Digraph& d, std::vector<OrientedCycle4> cycles);

    const std::vector<OrientedCycle4>& cycles() const { return cycles_; }
    std::optional<Permutation> extend(std::size_t c, std::size_t c2, int rotation) const;

private:
    ColoredSearch search_;
    std::vector<OrientedCycle4> cycles_;
    std::vector<ColoredSearch::State> states_; // index 4 * cycle + rotation
};

struct UHFailure {
    OrientedCycle4 cycle;
    OrientedCycle4 cycle2;
    int rotation = 0;
};

struct UHOptions {
    /// Number of sampled direct extensions; 0 checks every triple.
    std::size_t sample = 100;
    std::uint64_t seed = 0x5eed;
    unsigned workers = 1;
    std::size_t max_failures_reported = 16;
};

struct UHReport {
    bool pass = false;
    std::uint64_t aut_order = 0;
    std::size_t cycle_count = 0;
    /// Each arc lies in exactly one 4-cycle, so flags and arcs correspond.
    bool flag_arc_bijection = false;
    std::size_t arc_orbit_count = 0;
    /// Fast-path verdict; only meaningful when flag_arc_bijection holds.
    bool flag_transitive = false;
    bool exhaustive = false;
    std::size_t direct_checked = 0;
    std::size_t direct_failed = 0;
    /// Sampled direct checks agree with the fast-path verdict.
    bool sample_agrees = true;
    bool labels_preserved = false;
    std::vector<UHFailure> failures;
};

UHReport verify_c4uh(const Digraph& d, const UHOptions& options = {});

} // namespace fanouh

#endif
