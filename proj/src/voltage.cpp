#include "fanouh/voltage.hpp"

#include <algorithm>
#include <set>

#include "fanouh/autos.hpp"
#include "fanouh/error.hpp"

namespace fanouh {

namespace {

constexpr std::size_t kReps = kVertexCount / 7;

} // namespace

GroupAction z7_action()
{
    return {translation_automorphism(1)};
}

void validate_action(const Digraph& d, const GroupAction& a)
{
    if (a.generator.size() != d.size()) {
        throw InvalidAction("generator acts on the wrong number of vertices");
    }
    if (!a.generator.pow(7).is_identity()) {
        throw InvalidAction("generator does not have order 7");
    }
    for (int t = 1; t < 7; ++t) {
        const auto g = a.generator.pow(t);
        for (std::size_t v = 0; v < d.size(); ++v) {
            if (g(static_cast<VertexId>(v)) == static_cast<VertexId>(v)) {
                throw InvalidAction("power " + std::to_string(t) + " fixes vertex " + std::to_string(v));
            }
        }
    }
    if (!is_automorphism(a.generator, d)) {
        throw InvalidAction("generator is not an automorphism of the digraph");
    }
}

std::size_t VoltageGraph::out_degree(std::size_t rep) const
{
    return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [&](const auto& a) { return a.from == rep; }));
}

std::size_t VoltageGraph::in_degree(std::size_t rep) const
{
    return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [&](const auto& a) { return a.to == rep; }));
}

VoltageGraph quotient(const Digraph& d, const GroupAction& a)
{
    if (d.size() != kVertexCount) {
        throw InvalidAction("quotient expects the 168 pencil vertices");
    }
    validate_action(d, a);
    VoltageGraph out;
    for (std::size_t r = 0; r < kReps; ++r) {
        out.reps.push_back(static_cast<VertexId>(r));
    }
    for (std::size_t r = 0; r < kReps; ++r) {
        const auto outs = d.out(static_cast<VertexId>(r));
        const auto labels = d.out_labels(static_cast<VertexId>(r));
        for (std::size_t k = 0; k < outs.size(); ++k) {
            const DVertex& target = vertex_at(static_cast<std::size_t>(outs[k]));
            const int voltage = target.x().value();
            const auto rep = vertex_index(translate(target, -voltage));
            out.arcs.push_back({r, rep, voltage, labels[k]});
        }
    }
    return out;
}

Digraph derive(const VoltageGraph& v)
{
    const std::size_t reps = v.reps.size();
    const std::size_t n = reps * 7;
    // (rep, mu) -> canonical index of the translated representative when the
    // representatives are pencil vertices; otherwise mu * reps + rep.
    const bool pencil_reps =
        reps == kReps && std::all_of(v.reps.begin(), v.reps.end(), [](VertexId r) { return r >= 0 && r < 168; });
    auto index = [&](std::size_t rep, int mu) -> VertexId {
        if (pencil_reps) {
            return static_cast<VertexId>(
                vertex_index(translate(vertex_at(static_cast<std::size_t>(v.reps[rep])), mu)));
        }
        return static_cast<VertexId>(static_cast<std::size_t>(mu) * reps + rep);
    };
    std::vector<std::vector<std::pair<VertexId, Label>>> out(n);
    for (int mu = 0; mu < 7; ++mu) {
        for (const auto& arc : v.arcs) {
            const VertexId from = index(arc.from, mu);
            const VertexId to = index(arc.to, (arc.voltage + mu) % 7);
            out[static_cast<std::size_t>(from)].emplace_back(to, arc.label);
        }
    }
    Digraph d(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (const auto& [to, label] : out[u]) {
            d.add_arc(static_cast<VertexId>(u), to, label);
        }
    }
    return d;
}

CycleOrbitCount cycle_orbit_count(const Digraph& d, const GroupAction& a)
{
    const auto cycles = enumerate_4cycles(d);
    std::set<OrientedCycle4> seen;
    CycleOrbitCount out;
    for (const auto& c : cycles) {
        if (seen.contains(c)) {
            continue;
        }
        std::size_t size = 0;
        auto image = c;
        do {
            seen.insert(image);
            ++size;
            image = OrientedCycle4({a.generator(image[0]), a.generator(image[1]), a.generator(image[2]),
                                    a.generator(image[3])});
        } while (image != c);
        ++out.orbits;
        out.sizes.push_back(size);
    }
    return out;
}

int net_voltage(const VoltageGraph& v, const Digraph& d, const OrientedCycle4& cycle)
{
    int total = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto label = d.label_of(cycle[k], cycle[k + 1]);
        if (!label) {
            return -1;
        }
        const DVertex& from = vertex_at(static_cast<std::size_t>(cycle[k]));
        const DVertex& to = vertex_at(static_cast<std::size_t>(cycle[k + 1]));
        const auto rep_from = vertex_index(translate(from, -from.x().value()));
        const auto rep_to = vertex_index(translate(to, -to.x().value()));
        const auto arc = std::find_if(v.arcs.begin(), v.arcs.end(),
                                      [&](const VoltageArc& a) { return a.from == rep_from && a.label == *label; });
        if (arc == v.arcs.end() || arc->to != rep_to) {
            return -1;
        }
        total += arc->voltage;
    }
    return total % 7;
}

} // namespace fanouh
