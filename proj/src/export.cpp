#include "fanouh/export.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fanouh/error.hpp"

namespace fanouh {

using nlohmann::ordered_json;

namespace {

bool pencil_graph(const Digraph& d)
{
    return d.size() == kVertexCount;
}

std::string rep_name(const VoltageGraph& v, std::size_t rep)
{
    return compact_string(vertex_at(static_cast<std::size_t>(v.reps[rep])));
}

ordered_json cycle_json(const Digraph& d, const OrientedCycle4& c)
{
    ordered_json out = ordered_json::array();
    for (VertexId v : c.vertices()) {
        out.push_back(vertex_name(d, v));
    }
    return out;
}

std::string finish(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

} // namespace

std::string vertex_name(const Digraph& d, VertexId v)
{
    return pencil_graph(d) ? compact_string(vertex_at(static_cast<std::size_t>(v))) : std::to_string(v);
}

std::string digraph_dot(const Digraph& d)
{
    std::ostringstream out;
    out << "digraph D {\n";
    for (std::size_t v = 0; v < d.size(); ++v) {
        out << "  v" << v << " [label=\"" << vertex_name(d, static_cast<VertexId>(v)) << "\"];\n";
    }
    for (const Arc& a : d.arcs()) {
        out << "  v" << a.from << " -> v" << a.to << " [label=\"" << a.label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string digraph_json(const Digraph& d, const std::vector<OrientedCycle4>& cycles)
{
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (std::size_t v = 0; v < d.size(); ++v) {
        j["vertices"].push_back(vertex_name(d, static_cast<VertexId>(v)));
    }
    j["arcs"] = ordered_json::array();
    for (const Arc& a : d.arcs()) {
        j["arcs"].push_back({{"from", vertex_name(d, a.from)}, {"to", vertex_name(d, a.to)}, {"label", a.label}});
    }
    j["cycles"] = ordered_json::array();
    for (const auto& c : cycles) {
        j["cycles"].push_back(cycle_json(d, c));
    }
    return finish(j);
}

Digraph digraph_from_json(std::string_view text)
{
    try {
        const auto j = ordered_json::parse(text);
        const auto& vertices = j.at("vertices");
        if (vertices.size() != kVertexCount) {
            throw ParseError("expected 168 vertices");
        }
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            if (vertex_index(parse_compact(vertices[v].get<std::string>())) != v) {
                throw ParseError("vertices are not in canonical order");
            }
        }
        Digraph d(kVertexCount);
        for (const auto& a : j.at("arcs")) {
            d.add_arc(static_cast<VertexId>(vertex_index(parse_compact(a.at("from").get<std::string>()))),
                      static_cast<VertexId>(vertex_index(parse_compact(a.at("to").get<std::string>()))),
                      a.at("label").get<int>());
        }
        return d;
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("malformed digraph JSON: ") + e.what());
    }
}

std::string coxeter_dot(const Graph& g)
{
    const auto& vertices = cox_vertices();
    std::ostringstream out;
    out << "graph Cox {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out << "  v" << v << " [label=\"" << (g.size() == vertices.size() ? vertices[v].to_string() : std::to_string(v))
            << "\"];\n";
    }
    for (const auto& [u, w] : g.edges()) {
        out << "  v" << u << " -- v" << w << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string coxeter_json(const Graph& g)
{
    const auto& vertices = cox_vertices();
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (std::size_t v = 0; v < g.size(); ++v) {
        j["vertices"].push_back(g.size() == vertices.size() ? vertices[v].to_string() : std::to_string(v));
    }
    j["edges"] = ordered_json::array();
    for (const auto& [u, w] : g.edges()) {
        j["edges"].push_back({u, w});
    }
    return finish(j);
}

std::string quotient_dot(const VoltageGraph& v)
{
    std::ostringstream out;
    out << "digraph Quotient {\n";
    for (std::size_t r = 0; r < v.reps.size(); ++r) {
        out << "  q" << r << " [label=\"" << rep_name(v, r) << " " << rowcol(vertex_at(static_cast<std::size_t>(v.reps[r]))).to_string()
            << "\"];\n";
    }
    for (const auto& a : v.arcs) {
        out << "  q" << a.from << " -> q" << a.to << " [label=\"" << a.voltage << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string quotient_json(const VoltageGraph& v)
{
    ordered_json j;
    j["reps"] = ordered_json::array();
    for (std::size_t r = 0; r < v.reps.size(); ++r) {
        j["reps"].push_back(rep_name(v, r));
    }
    j["arcs"] = ordered_json::array();
    for (const auto& a : v.arcs) {
        j["arcs"].push_back({{"from", rep_name(v, a.from)}, {"to", rep_name(v, a.to)}, {"voltage", a.voltage}});
    }
    return finish(j);
}

VoltageGraph quotient_from_json(std::string_view text)
{
    try {
        const auto j = ordered_json::parse(text);
        VoltageGraph v;
        std::vector<std::string> names;
        for (const auto& r : j.at("reps")) {
            names.push_back(r.get<std::string>());
            v.reps.push_back(static_cast<VertexId>(vertex_index(parse_compact(names.back()))));
        }
        auto rep_of = [&](const std::string& name) {
            const auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) {
                throw ParseError("arc endpoint " + name + " is not a representative");
            }
            return static_cast<std::size_t>(it - names.begin());
        };
        std::vector<std::size_t> seen(names.size(), 0);
        for (const auto& a : j.at("arcs")) {
            const auto from = rep_of(a.at("from").get<std::string>());
            const Label label = kLabelOrder[seen[from]++ % 3];
            v.arcs.push_back({from, rep_of(a.at("to").get<std::string>()), a.at("voltage").get<int>(), label});
        }
        return v;
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("malformed quotient JSON: ") + e.what());
    }
}

std::string uh_report_json(const UHReport& r)
{
    const Digraph& d = d_graph();
    ordered_json j;
    j["pass"] = r.pass;
    j["aut_order"] = r.aut_order;
    j["failures"] = ordered_json::array();
    for (const auto& f : r.failures) {
        j["failures"].push_back({{"cycle", cycle_json(d, f.cycle)}, {"cycle2", cycle_json(d, f.cycle2)}, {"rotation", f.rotation}});
    }
    j["cycles"] = r.cycle_count;
    j["arc_orbits"] = r.arc_orbit_count;
    j["flag_transitive"] = r.flag_transitive;
    j["exhaustive"] = r.exhaustive;
    j["direct_checked"] = r.direct_checked;
    j["direct_failed"] = r.direct_failed;
    j["sample_agrees"] = r.sample_agrees;
    j["labels_preserved"] = r.labels_preserved;
    return finish(j);
}

} // namespace fanouh
