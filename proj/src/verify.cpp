#include "fanouh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fanouh/autos.hpp"
#include "fanouh/dgraph.hpp"
#include "fanouh/error.hpp"
#include "fanouh/export.hpp"
#include "fanouh/golden.hpp"
#include "fanouh/voltage.hpp"

namespace fanouh {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Check timed(std::string name, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("error: ") + e.what()};
    }
    const auto stop = std::chrono::steady_clock::now();
    return {std::move(name), o.pass, std::move(o.detail),
            std::chrono::duration<double, std::milli>(stop - start).count()};
}

std::string arc_string(const Digraph& d, VertexId from, VertexId to)
{
    return vertex_name(d, from) + " -> " + vertex_name(d, to);
}

} // namespace

bool VerificationReport::pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::optional<std::vector<Suite>> parse_selector(std::string_view selector)
{
    static constexpr std::array<Suite, 5> all{Suite::coxeter, Suite::digraph, Suite::cycles, Suite::uh, Suite::voltage};
    if (selector == "all") {
        return std::vector<Suite>(all.begin(), all.end());
    }
    for (Suite s : all) {
        if (suite_name(s) == selector) {
            return std::vector<Suite>{s};
        }
    }
    return std::nullopt;
}

std::string_view suite_name(Suite s)
{
    switch (s) {
    case Suite::coxeter:
        return "coxeter";
    case Suite::digraph:
        return "digraph";
    case Suite::cycles:
        return "cycles";
    case Suite::uh:
        return "uh";
    case Suite::voltage:
        return "voltage";
    }
    return "";
}

std::vector<Check> coxeter_suite(const Graph& g)
{
    std::vector<Check> out;
    out.push_back(timed("coxeter.vertices", [&] {
        return Outcome{g.size() == 28, std::to_string(g.size()) + " vertices"};
    }));
    out.push_back(timed("coxeter.edges", [&] {
        return Outcome{g.edge_count() == 42, std::to_string(g.edge_count()) + " edges"};
    }));
    const auto start = std::chrono::steady_clock::now();
    const auto report = validate_coxeter(g);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (const auto& e : report.entries) {
        std::string name = "coxeter." + e.name;
        std::replace(name.begin(), name.end(), ' ', '_');
        out.push_back({name, e.pass, e.detail, ms / static_cast<double>(report.entries.size())});
    }
    return out;
}

std::vector<Check> digraph_suite(const Digraph& d)
{
    std::vector<Check> out;
    out.push_back(timed("digraph.census", [&] {
        return Outcome{d.size() == 168 && d.arc_count() == 504,
                       std::to_string(d.size()) + " vertices, " + std::to_string(d.arc_count()) + " arcs"};
    }));
    out.push_back(timed("digraph.degrees", [&] {
        for (std::size_t v = 0; v < d.size(); ++v) {
            const auto id = static_cast<VertexId>(v);
            if (d.out(id).size() != 3 || d.in(id).size() != 3) {
                return Outcome{false, "vertex " + vertex_name(d, id) + " has in-degree " +
                                          std::to_string(d.in(id).size()) + ", out-degree " +
                                          std::to_string(d.out(id).size())};
            }
        }
        return Outcome{true, "in-degree = out-degree = 3 everywhere"};
    }));
    out.push_back(timed("digraph.golden_table", [&] {
        if (d.size() != kVertexCount) {
            return Outcome{false, "not a pencil digraph"};
        }
        const auto report = golden_sublist_check(d);
        if (report.pass) {
            return Outcome{true, "24 rows match (" + std::to_string(sublist_errata().size()) +
                                     " published entries corrected as errata)"};
        }
        std::string detail;
        for (const auto& diff : report.diffs) {
            detail += "row " + diff.vertex + " position " + std::to_string(diff.position) + ": expected " +
                      diff.expected + ", got " + diff.got + "; ";
        }
        return Outcome{false, detail};
    }));
    out.push_back(timed("digraph.no_short_circuits", [&] {
        if (const auto c = find_short_circuit(d)) {
            std::string w;
            for (VertexId v : c->vertices) {
                w += (w.empty() ? "" : " -> ") + vertex_name(d, v);
            }
            return Outcome{false, "circuit of length " + std::to_string(c->vertices.size()) + ": " + w};
        }
        return Outcome{true, "no circuits of length 2 or 3"};
    }));
    out.push_back(timed("digraph.strongly_connected", [&] {
        const auto k = strong_component_count(d);
        return Outcome{k == 1, std::to_string(k) + " strong component(s)"};
    }));
    out.push_back(timed("digraph.arc_rule", [&] {
        if (d.size() != kVertexCount) {
            return Outcome{false, "not a pencil digraph"};
        }
        for (std::size_t v = 0; v < d.size(); ++v) {
            const auto id = static_cast<VertexId>(v);
            const auto outs = d.out(id);
            const auto labels = d.out_labels(id);
            if (outs.size() != 3) {
                return Outcome{false, "vertex " + vertex_name(d, id) + " does not have 3 out-arcs"};
            }
            for (std::size_t k = 0; k < 3; ++k) {
                const auto& u = vertex_at(v);
                const auto& w = vertex_at(static_cast<std::size_t>(outs[k]));
                if (labels[k] != kLabelOrder[k] || arc_label(u, w) != labels[k]) {
                    return Outcome{false, "arc " + arc_string(d, id, outs[k]) + " violates the arc rule"};
                }
            }
        }
        return Outcome{true, "every arc satisfies the rule for its label, out-lists ordered 1,2,0"};
    }));
    out.push_back(timed("digraph.translations", [&] {
        for (int t = 1; t < 7; ++t) {
            const auto sigma = translation_automorphism(t);
            if (!is_automorphism(sigma, d)) {
                return Outcome{false, "translation by " + std::to_string(t) + " is not an automorphism"};
            }
            const std::array<Permutation, 1> gens{sigma};
            if (!preserves_labels(gens, d)) {
                return Outcome{false, "translation by " + std::to_string(t) + " moves arc labels"};
            }
        }
        return Outcome{true, "all 7 translations are label-preserving automorphisms"};
    }));
    out.push_back(timed("digraph.collineations", [&] {
        std::set<VertexId> images_of_zero;
        for (const auto& g : collineations()) {
            const auto sigma = induced_automorphism(g);
            if (!is_automorphism(sigma, d)) {
                std::string m;
                for (Point p : g.map()) {
                    m += static_cast<char>('0' + p.value());
                }
                return Outcome{false, "collineation " + m + " does not induce an automorphism"};
            }
            images_of_zero.insert(sigma(0));
        }
        return Outcome{images_of_zero.size() == 168,
                       "168 induced automorphisms, vertex 0 has " + std::to_string(images_of_zero.size()) + " images"};
    }));
    return out;
}

std::vector<Check> cycles_suite(const Digraph& d)
{
    std::vector<Check> out;
    std::vector<OrientedCycle4> census;
    out.push_back(timed("cycles.census_126", [&] {
        census = enumerate_4cycles(d);
        return Outcome{census.size() == 126, std::to_string(census.size()) + " oriented 4-cycles"};
    }));
    out.push_back(timed("cycles.arc_partition", [&] {
        std::vector<std::size_t> first(d.size() + 1, 0);
        for (std::size_t v = 0; v < d.size(); ++v) {
            first[v + 1] = first[v] + d.out(static_cast<VertexId>(v)).size();
        }
        std::vector<int> cover(first.back(), 0);
        for (const auto& c : census) {
            for (std::size_t k = 0; k < 4; ++k) {
                const auto outs = d.out(c[k]);
                const auto pos = static_cast<std::size_t>(std::find(outs.begin(), outs.end(), c[k + 1]) - outs.begin());
                ++cover[first[static_cast<std::size_t>(c[k])] + pos];
            }
        }
        for (std::size_t v = 0; v < d.size(); ++v) {
            for (std::size_t k = 0; k < d.out(static_cast<VertexId>(v)).size(); ++k) {
                const int n = cover[first[v] + k];
                if (n != 1) {
                    return Outcome{false, "arc " + arc_string(d, static_cast<VertexId>(v), d.out(static_cast<VertexId>(v))[k]) +
                                              " lies on " + std::to_string(n) + " 4-cycles"};
                }
            }
        }
        return Outcome{true, "the 4-cycles partition all " + std::to_string(first.back()) + " arcs"};
    }));
    out.push_back(timed("cycles.label_orbits", [&] {
        const auto orbits = cycles_from_label_orbits(d);
        if (const auto* err = std::get_if<std::string>(&orbits)) {
            return Outcome{false, *err};
        }
        const auto& from_orbits = std::get<std::vector<OrientedCycle4>>(orbits);
        if (from_orbits != census) {
            return Outcome{false, std::to_string(from_orbits.size()) + " label-orbit cycles differ from the " +
                                      std::to_string(census.size()) + "-cycle census"};
        }
        return Outcome{true, "3 label maps, 42 orbits of length 4 each, equal to the census"};
    }));
    out.push_back(timed("cycles.example", [&] {
        if (d.size() != kVertexCount) {
            return Outcome{false, "not a pencil digraph"};
        }
        std::array<VertexId, 4> walk;
        const std::array<std::string_view, 4> names{"253_0", "241_6", "235_0", "214_6"};
        for (std::size_t k = 0; k < 4; ++k) {
            walk[k] = static_cast<VertexId>(vertex_index(parse_compact(names[k])));
        }
        const OrientedCycle4 example(walk);
        const bool present = std::binary_search(census.begin(), census.end(), example);
        return Outcome{present, example.to_string() + (present ? " present" : " missing")};
    }));
    return out;
}

std::vector<Check> uh_suite(const Digraph& d, const VerifyOptions& options, UHReport* uh_report)
{
    std::vector<Check> out;
    std::optional<AutGroup> group;
    out.push_back(timed("uh.aut_order", [&] {
        group = automorphism_group(d, {.fixed = {}, .workers = options.workers, .enumerate_bound = 0});
        const bool labels = preserves_labels(group->generators(), d);
        return Outcome{group->order() % 504 == 0,
                       "|Aut| = " + std::to_string(group->order()) +
                           (labels ? ", arc labels Aut-invariant" : ", arc labels not Aut-invariant")};
    }));
    out.push_back(timed("uh.flag_transitive", [&] {
        if (!group) {
            return Outcome{false, "no automorphism group"};
        }
        const auto arc_orbit_list = arc_orbits(*group, d);
        const auto cycles = enumerate_4cycles(d);
        const bool bijection = cycles.size() * 4 == d.arc_count() && std::all_of(cycles.begin(), cycles.end(), [&](const auto& c) {
                                   return c.is_cycle_of(d);
                               });
        std::string detail = std::to_string(arc_orbit_list.size()) + " arc orbit(s), " +
                             std::to_string(cycles.size() * 4) + " flags over " + std::to_string(d.arc_count()) + " arcs";
        return Outcome{bijection && arc_orbit_list.size() == 1, detail};
    }));
    out.push_back(timed("uh.direct_extensions", [&] {
        const auto report = verify_c4uh(d, {.sample = options.sample, .seed = 0x5eed, .workers = options.workers,
                                            .max_failures_reported = 16});
        if (uh_report) {
            *uh_report = report;
        }
        std::string detail = std::to_string(report.direct_checked - report.direct_failed) + "/" +
                             std::to_string(report.direct_checked) +
                             (report.exhaustive ? " triples extend (exhaustive)" : " sampled triples extend");
        if (!report.failures.empty()) {
            const auto& f = report.failures.front();
            detail += "; first failure " + f.cycle.to_string() + " -> " + f.cycle2.to_string() + " rotation " +
                      std::to_string(f.rotation);
        }
        return Outcome{report.pass && report.sample_agrees, detail};
    }));
    return out;
}

std::vector<Check> voltage_suite(const Digraph& d)
{
    std::vector<Check> out;
    const auto action = z7_action();
    std::optional<VoltageGraph> q;
    out.push_back(timed("voltage.z7_action", [&] {
        validate_action(d, action);
        const auto orbits_ = orbits(std::array<Permutation, 1>{action.generator}, d.size());
        const bool all_seven = std::all_of(orbits_.begin(), orbits_.end(), [](const auto& o) { return o.size() == 7; });
        return Outcome{orbits_.size() == 24 && all_seven,
                       std::to_string(orbits_.size()) + " vertex orbits, free action of order 7"};
    }));
    out.push_back(timed("voltage.quotient", [&] {
        q = quotient(d, action);
        for (std::size_t r = 0; r < q->reps.size(); ++r) {
            if (q->out_degree(r) != 3 || q->in_degree(r) != 3) {
                return Outcome{false, "quotient vertex " + std::to_string(r) + " is not of in/out-degree 3"};
            }
        }
        return Outcome{q->reps.size() == 24 && q->arcs.size() == 72,
                       std::to_string(q->reps.size()) + " quotient vertices, " + std::to_string(q->arcs.size()) +
                           " voltage arcs"};
    }));
    out.push_back(timed("voltage.round_trip", [&] {
        if (!q) {
            return Outcome{false, "no quotient"};
        }
        const bool same = derive(*q) == d;
        return Outcome{same, same ? "derived graph equals D arc for arc" : "derived graph differs from D"};
    }));
    out.push_back(timed("voltage.cycle_orbits", [&] {
        validate_action(d, action);
        const auto count = cycle_orbit_count(d, action);
        const bool sevens = std::all_of(count.sizes.begin(), count.sizes.end(), [](std::size_t s) { return s == 7; });
        return Outcome{count.orbits == 18 && sevens, std::to_string(count.orbits) + " cycle orbits" +
                                                         (sevens ? ", each of size 7" : ", not all of size 7")};
    }));
    out.push_back(timed("voltage.closure", [&] {
        if (!q) {
            return Outcome{false, "no quotient"};
        }
        for (const auto& c : enumerate_4cycles(d)) {
            if (net_voltage(*q, d, c) != 0) {
                return Outcome{false, "cycle " + c.to_string() + " has nonzero net voltage"};
            }
        }
        return Outcome{true, "every 4-cycle projects to a closed walk of net voltage 0"};
    }));
    return out;
}

VerificationReport run_verification(std::span<const Suite> suites, const Graph& cox, const Digraph& d,
                                    const VerifyOptions& options)
{
    VerificationReport report;
    for (Suite s : suites) {
        std::vector<Check> checks;
        switch (s) {
        case Suite::coxeter:
            checks = coxeter_suite(cox);
            break;
        case Suite::digraph:
            checks = digraph_suite(d);
            break;
        case Suite::cycles:
            checks = cycles_suite(d);
            break;
        case Suite::uh:
            report.uh.emplace();
            checks = uh_suite(d, options, &*report.uh);
            break;
        case Suite::voltage:
            checks = voltage_suite(d);
            break;
        }
        report.checks.insert(report.checks.end(), checks.begin(), checks.end());
    }
    return report;
}

VerificationReport run_verification(std::span<const Suite> suites, const VerifyOptions& options)
{
    return run_verification(suites, build_coxeter(), build_d(), options);
}

std::string report_text(const VerificationReport& r, bool details)
{
    std::ostringstream out;
    for (const auto& c : r.checks) {
        out << "CHECK " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << static_cast<long long>(c.elapsed_ms + 0.5)
            << "ms)\n";
        if (details || !c.pass) {
            out << "  " << c.detail << "\n";
        }
    }
    out << "SUMMARY: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string report_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    if (r.uh) {
        auto uh = nlohmann::ordered_json::parse(uh_report_json(*r.uh));
        const bool uh_only =
            std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.name.starts_with("uh."); });
        if (uh_only) {
            j = std::move(uh);
        } else {
            j["uh"] = std::move(uh);
        }
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"status", c.pass ? "PASS" : "FAIL"},
                               {"detail", c.detail},
                               {"elapsed_ms", c.elapsed_ms}});
    }
    j["summary"] = r.pass() ? "PASS" : "FAIL";
    return j.dump(2) + "\n";
}

} // namespace fanouh
