#ifndef FANOUH_EXPORT_HPP
#define FANOUH_EXPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fanouh/autos.hpp"
#include "fanouh/coxeter.hpp"
#include "fanouh/dgraph.hpp"
#include "fanouh/voltage.hpp"

// Every writer emits its arrays in canonical order, so output is byte-stable.
namespace fanouh {

/// Compact symbol for pencil vertices, decimal index otherwise.
std::string vertex_name(const Digraph& d, VertexId v);

std::string digraph_dot(const Digraph& d);
/// {"vertices":[...], "arcs":[{"from","to","label"}...], "cycles":[[4 symbols]...]}
std::string digraph_json(const Digraph& d, const std::vector<OrientedCycle4>& cycles);
/// Inverse of digraph_json for the pencil digraph; throws ParseError.
Digraph digraph_from_json(std::string_view text);

std::string coxeter_dot(const Graph& g);
std::string coxeter_json(const Graph& g);

std::string quotient_dot(const VoltageGraph& v);
/// {"reps":[...], "arcs":[{"from","to","voltage"}...]}
std::string quotient_json(const VoltageGraph& v);
/// Reads back quotient_json output (arcs get labels 1, 2, 0 in per-rep order).
VoltageGraph quotient_from_json(std::string_view text);

/// {"pass", "aut_order", "failures":[{"cycle","cycle2","rotation"}...], ...}
std::string uh_report_json(const UHReport& r);

} // namespace fanouh

#endif
