#include "fanouh/dgraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fanouh {

std::optional<Label> arc_label(const DVertex& u, const DVertex& v)
{
    std::optional<Label> found;
    for (Label i : kLabelOrder) {
        const Label up = next_label(i);
        const Label down = prev_label(i);
        const bool holds = u.x() == v.c(i) && v.x() == u.c(i) && v.b(i) == u.b(i) && v.b(up) == u.c(up) &&
                           v.b(down) == u.c(down) && v.c(up) == u.b(down) && v.c(down) == u.b(up);
        if (holds) {
            if (found) {
                throw std::logic_error("arc rule satisfied by two labels");
            }
            found = i;
        }
    }
    return found;
}

DVertex step(const DVertex& u, Label i)
{
    std::array<Point, 3> b;
    b[slot(i)] = u.b(i);
    b[slot(next_label(i))] = u.c(next_label(i));
    b[slot(prev_label(i))] = u.c(prev_label(i));
    return DVertex(u.c(i), OrderedLine(b[0], b[1], b[2]));
}

Digraph build_d()
{
    const auto& vertices = enumerate_vertices();
    Digraph d(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        for (Label i : kLabelOrder) {
            d.add_arc(static_cast<VertexId>(v), static_cast<VertexId>(vertex_index(step(vertices[v], i))), i);
        }
    }
    return d;
}

const Digraph& d_graph()
{
    static const Digraph d = build_d();
    return d;
}

OrientedCycle4::OrientedCycle4(std::array<VertexId, 4> walk)
{
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            if (walk[a] == walk[b]) {
                throw std::invalid_argument("4-cycle with a repeated vertex");
            }
        }
    }
    std::rotate(walk.begin(), std::min_element(walk.begin(), walk.end()), walk.end());
    vertices_ = walk;
}

bool OrientedCycle4::is_cycle_of(const Digraph& d) const
{
    for (std::size_t k = 0; k < 4; ++k) {
        if (!d.has_arc((*this)[k], (*this)[k + 1])) {
            return false;
        }
    }
    return true;
}

std::string OrientedCycle4::to_string() const
{
    std::string s = "(";
    for (std::size_t k = 0; k < 4; ++k) {
        if (k) {
            s += ", ";
        }
        const auto v = static_cast<std::size_t>(vertices_[k]);
        s += v < kVertexCount ? compact_string(vertex_at(v)) : std::to_string(v);
    }
    return s + ")";
}

std::vector<OrientedCycle4> enumerate_4cycles(const Digraph& d)
{
    std::vector<OrientedCycle4> out;
    const auto n = static_cast<VertexId>(d.size());
    for (VertexId s = 0; s < n; ++s) {
        for (VertexId a : d.out(s)) {
            if (a <= s) {
                continue;
            }
            for (VertexId b : d.out(a)) {
                if (b <= s || b == a) {
                    continue;
                }
                for (VertexId c : d.out(b)) {
                    if (c <= s || c == a || c == b) {
                        continue;
                    }
                    if (d.has_arc(c, s)) {
                        out.emplace_back(std::array<VertexId, 4>{s, a, b, c});
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Permutation> label_map(const Digraph& d, std::size_t position)
{
    std::vector<VertexId> images(d.size());
    std::vector<bool> hit(d.size(), false);
    for (std::size_t v = 0; v < d.size(); ++v) {
        const auto outs = d.out(static_cast<VertexId>(v));
        if (outs.size() <= position) {
            return std::nullopt;
        }
        images[v] = outs[position];
        if (hit[static_cast<std::size_t>(images[v])]) {
            return std::nullopt;
        }
        hit[static_cast<std::size_t>(images[v])] = true;
    }
    return Permutation(std::move(images));
}

std::vector<std::vector<VertexId>> cycles_of(const Permutation& p)
{
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t v = 0; v < p.size(); ++v) {
        if (seen[v]) {
            continue;
        }
        std::vector<VertexId> orbit;
        for (auto w = static_cast<VertexId>(v); !seen[static_cast<std::size_t>(w)]; w = p(w)) {
            seen[static_cast<std::size_t>(w)] = true;
            orbit.push_back(w);
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

std::variant<std::vector<OrientedCycle4>, std::string> cycles_from_label_orbits(const Digraph& d)
{
    std::vector<OrientedCycle4> out;
    for (std::size_t position = 0; position < 3; ++position) {
        const auto map = label_map(d, position);
        if (!map) {
            return "out-list position " + std::to_string(position) + " does not define a permutation";
        }
        for (const auto& orbit : cycles_of(*map)) {
            if (orbit.size() != 4) {
                return "label orbit through vertex " + std::to_string(orbit.front()) + " has length " +
                       std::to_string(orbit.size());
            }
            out.emplace_back(std::array<VertexId, 4>{orbit[0], orbit[1], orbit[2], orbit[3]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<ShortCircuit> find_short_circuit(const Digraph& d)
{
    const auto n = static_cast<VertexId>(d.size());
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : d.out(u)) {
            if (v == u) {
                return ShortCircuit{{u}};
            }
            if (d.has_arc(v, u)) {
                return ShortCircuit{{u, v}};
            }
            for (VertexId w : d.out(v)) {
                if (w != u && w != v && d.has_arc(w, u)) {
                    return ShortCircuit{{u, v, w}};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace fanouh
