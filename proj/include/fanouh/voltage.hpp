#ifndef FANOUH_VOLTAGE_HPP
#define FANOUH_VOLTAGE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fanouh/dgraph.hpp"
#include "fanouh/digraph.hpp"

namespace fanouh {

/// Cyclic group of order 7 acting on D's vertices through one generator.
struct GroupAction {
    Permutation generator;
};

/// Translation by 1 on every coordinate.
GroupAction z7_action();

/// Throws InvalidAction unless the generator has order 7, fixes no vertex under
/// any nonidentity power, and is an automorphism of d.
void validate_action(const Digraph& d, const GroupAction& a);

struct VoltageArc {
    std::size_t from = 0; // representative index
    std::size_t to = 0;
    int voltage = 0;
    Label label = 1;

    friend auto operator<=>(const VoltageArc&, const VoltageArc&) = default;
};

/// Quotient D/Z7 with representatives the x = 0 vertices (canonical indices 0..23).
struct VoltageGraph {
    std::vector<VertexId> reps;
    std::vector<VoltageArc> arcs;

    std::size_t out_degree(std::size_t rep) const;
    std::size_t in_degree(std::size_t rep) const;
};

/// Throws InvalidAction when the action is not free or not an automorphism.
VoltageGraph quotient(const Digraph& d, const GroupAction& a);

/// Lift: vertex (rep, mu) is the representative translated by mu, and each
/// quotient arc of voltage nu joins (rep, mu) to (rep', nu + mu).
Digraph derive(const VoltageGraph& v);

struct CycleOrbitCount {
    std::size_t orbits = 0;
    std::vector<std::size_t> sizes;
};

/// Orbits of the oriented 4-cycles of d under the group action.
CycleOrbitCount cycle_orbit_count(const Digraph& d, const GroupAction& a);

/// Sum mod 7 of the voltages along the quotient walk that a 4-cycle of d projects
/// to, following quotient arcs by label; -1 if the projection leaves the quotient.
int net_voltage(const VoltageGraph& v, const Digraph& d, const OrientedCycle4& cycle);

} // namespace fanouh

#endif
