#include "fanouh/autos.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace fanouh {

namespace {

constexpr std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
    // splitmix64 finalizer over the running hash.
    std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<std::size_t> parent_;
};

/// Runs body(k) for k in [0, count) on `workers` threads, striding.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body)
{
    if (workers <= 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k) {
            body(k);
        }
        return;
    }
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t k = w; k < count; k += workers) {
                body(k);
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
}

} // namespace

bool is_automorphism(const Permutation& sigma, const Digraph& d)
{
    if (sigma.size() != d.size()) {
        return false;
    }
    for (const Arc& a : d.arcs()) {
        if (!d.has_arc(sigma(a.from), sigma(a.to))) {
            return false;
        }
    }
    return true;
}

Permutation induced_automorphism(const Collineation& g)
{
    const auto& vertices = enumerate_vertices();
    std::vector<VertexId> images(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        images[v] = static_cast<VertexId>(vertex_index(apply(g, vertices[v])));
    }
    return Permutation(std::move(images));
}

Permutation translation_automorphism(int t)
{
    return induced_automorphism(Collineation::translation(t));
}

ColoredSearch::ColoredSearch(const Digraph& d) : d_(&d), n_(d.size())
{
    out_off_.push_back(0);
    in_off_.push_back(0);
    for (std::size_t v = 0; v < n_; ++v) {
        for (VertexId w : d.out(static_cast<VertexId>(v))) {
            out_adj_.push_back(w);
        }
        for (VertexId w : d.in(static_cast<VertexId>(v))) {
            in_adj_.push_back(w);
        }
        out_off_.push_back(static_cast<int>(out_adj_.size()));
        in_off_.push_back(static_cast<int>(in_adj_.size()));
    }
}

void ColoredSearch::refine(State& s) const
{
    std::vector<int> sig;
    std::vector<int> off(n_ + 1, 0);
    std::vector<int> order(n_);
    sig.reserve(n_ * 8);
    for (;;) {
        sig.clear();
        for (std::size_t v = 0; v < n_; ++v) {
            off[v] = static_cast<int>(sig.size());
            sig.push_back(s.color[v]);
            sig.push_back(out_off_[v + 1] - out_off_[v]);
            const auto out_begin = sig.size();
            for (int k = out_off_[v]; k < out_off_[v + 1]; ++k) {
                sig.push_back(s.color[static_cast<std::size_t>(out_adj_[static_cast<std::size_t>(k)])]);
            }
            std::sort(sig.begin() + static_cast<std::ptrdiff_t>(out_begin), sig.end());
            sig.push_back(in_off_[v + 1] - in_off_[v]);
            const auto in_begin = sig.size();
            for (int k = in_off_[v]; k < in_off_[v + 1]; ++k) {
                sig.push_back(s.color[static_cast<std::size_t>(in_adj_[static_cast<std::size_t>(k)])]);
            }
            std::sort(sig.begin() + static_cast<std::ptrdiff_t>(in_begin), sig.end());
        }
        off[n_] = static_cast<int>(sig.size());

        auto span_of = [&](int v) {
            const auto b = sig.begin() + off[static_cast<std::size_t>(v)];
            const auto e = sig.begin() + off[static_cast<std::size_t>(v) + 1];
            return std::pair{b, e};
        };
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const auto [ab, ae] = span_of(a);
            const auto [bb, be] = span_of(b);
            const bool less = std::lexicographical_compare(ab, ae, bb, be);
            if (less || std::lexicographical_compare(bb, be, ab, ae)) {
                return less;
            }
            return a < b;
        });

        int cells = 0;
        std::uint64_t round = 0;
        std::size_t run = 0;
        for (std::size_t k = 0; k < n_; ++k) {
            const bool fresh = k == 0 || !std::equal(span_of(order[k - 1]).first, span_of(order[k - 1]).second,
                                                     span_of(order[k]).first, span_of(order[k]).second);
            if (fresh) {
                if (k > 0) {
                    round = mix(round, run);
                }
                ++cells;
                run = 0;
                const auto [b, e] = span_of(order[k]);
                for (auto it = b; it != e; ++it) {
                    round = mix(round, static_cast<std::uint64_t>(*it));
                }
            }
            ++run;
            s.color[static_cast<std::size_t>(order[k])] = cells - 1;
        }
        round = mix(round, run);
        s.trace = mix(s.trace, round);
        const bool stable = cells == s.cells;
        s.cells = cells;
        if (stable || cells == static_cast<int>(n_)) {
            return;
        }
    }
}

ColoredSearch::State ColoredSearch::root() const
{
    State s;
    s.color.assign(n_, 0);
    s.cells = n_ > 0 ? 1 : 0;
    refine(s);
    return s;
}

ColoredSearch::State ColoredSearch::individualize(const State& s, VertexId v) const
{
    State t;
    t.trace = mix(s.trace, static_cast<std::uint64_t>(s.color[static_cast<std::size_t>(v)]) + 1);
    std::vector<int> doubled(n_);
    std::vector<int> rank(2 * static_cast<std::size_t>(s.cells) + 2, 0);
    for (std::size_t u = 0; u < n_; ++u) {
        doubled[u] = 2 * s.color[u] + (static_cast<VertexId>(u) == v ? 0 : 1);
        rank[static_cast<std::size_t>(doubled[u])] = 1;
    }
    int next = 0;
    for (auto& r : rank) {
        const int present = r;
        r = next;
        next += present;
    }
    t.color.resize(n_);
    for (std::size_t u = 0; u < n_; ++u) {
        t.color[u] = rank[static_cast<std::size_t>(doubled[u])];
    }
    t.cells = next;
    refine(t);
    return t;
}

std::pair<int, VertexId> ColoredSearch::target(const State& s) const
{
    std::vector<int> size(static_cast<std::size_t>(s.cells), 0);
    std::vector<VertexId> first(static_cast<std::size_t>(s.cells), -1);
    for (std::size_t v = 0; v < n_; ++v) {
        const auto c = static_cast<std::size_t>(s.color[v]);
        if (size[c]++ == 0) {
            first[c] = static_cast<VertexId>(v);
        }
    }
    int best = -1;
    for (std::size_t c = 0; c < size.size(); ++c) {
        if (size[c] > 1 && (best < 0 || size[c] < size[static_cast<std::size_t>(best)])) {
            best = static_cast<int>(c);
        }
    }
    if (best < 0) {
        return {-1, -1};
    }
    return {best, first[static_cast<std::size_t>(best)]};
}

std::optional<Permutation> ColoredSearch::search(const State& left, const State& right) const
{
    if (discrete(left)) {
        std::vector<VertexId> at(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            at[static_cast<std::size_t>(right.color[v])] = static_cast<VertexId>(v);
        }
        std::vector<VertexId> images(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            images[v] = at[static_cast<std::size_t>(left.color[v])];
        }
        Permutation sigma(std::move(images));
        if (is_automorphism(sigma, *d_)) {
            return sigma;
        }
        return std::nullopt;
    }
    const auto [cell, beta] = target(left);
    const State child = individualize(left, beta);
    for (std::size_t v = 0; v < n_; ++v) {
        if (right.color[v] != cell) {
            continue;
        }
        const State candidate = individualize(right, static_cast<VertexId>(v));
        if (!child.compatible(candidate)) {
            continue;
        }
        if (auto found = search(child, candidate)) {
            return found;
        }
    }
    return std::nullopt;
}

std::optional<Permutation> find_automorphism(const Digraph& d,
                                             std::span<const std::pair<VertexId, VertexId>> prescribed)
{
    const ColoredSearch engine(d);
    auto left = engine.root();
    auto right = left;
    for (const auto& [from, to] : prescribed) {
        left = engine.individualize(left, from);
        right = engine.individualize(right, to);
        if (!left.compatible(right)) {
            return std::nullopt;
        }
    }
    return engine.search(left, right);
}

std::vector<std::vector<VertexId>> orbits(std::span<const Permutation> generators, std::size_t n)
{
    UnionFind uf(n);
    for (const auto& g : generators) {
        for (std::size_t v = 0; v < n; ++v) {
            uf.unite(v, static_cast<std::size_t>(g(static_cast<VertexId>(v))));
        }
    }
    std::vector<std::vector<VertexId>> out;
    std::vector<int> slot_of(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        const auto root = uf.find(v);
        if (slot_of[root] < 0) {
            slot_of[root] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot_of[root])].push_back(static_cast<VertexId>(v));
    }
    return out;
}

AutGroup::AutGroup(std::size_t n, std::vector<Permutation> generators, std::uint64_t order)
    : n_(n), generators_(std::move(generators)), order_(order)
{
}

void AutGroup::enumerate(std::uint64_t bound)
{
    if (order_ > bound) {
        elements_.reset();
        return;
    }
    std::set<Permutation> seen;
    std::vector<Permutation> frontier{Permutation::identity(n_)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            for (const auto& g : generators_) {
                auto q = p.then(g);
                if (seen.insert(q).second) {
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    if (seen.size() != order_) {
        throw std::logic_error("closure of generators disagrees with the computed order");
    }
    elements_.emplace(seen.begin(), seen.end());
}

std::vector<std::vector<VertexId>> AutGroup::vertex_orbits() const
{
    return orbits(generators_, n_);
}

AutGroup automorphism_group(const Digraph& d, const AutGroupOptions& options)
{
    const ColoredSearch engine(d);
    const std::size_t n = d.size();

    std::vector<ColoredSearch::State> path{engine.root()};
    for (VertexId f : options.fixed) {
        path.back() = engine.individualize(path.back(), f);
    }
    std::vector<VertexId> base;
    std::vector<int> cells;
    while (!engine.discrete(path.back())) {
        const auto [cell, beta] = engine.target(path.back());
        base.push_back(beta);
        cells.push_back(cell);
        path.push_back(engine.individualize(path.back(), beta));
    }

    std::vector<Permutation> generators;
    std::vector<std::size_t> orbit_sizes(base.size(), 1);
    std::uint64_t order = 1;

    auto orbit_of = [&](VertexId beta) {
        std::vector<bool> in(n, false);
        for (const auto& o : orbits(generators, n)) {
            if (std::find(o.begin(), o.end(), beta) != o.end()) {
                for (VertexId v : o) {
                    in[static_cast<std::size_t>(v)] = true;
                }
            }
        }
        return in;
    };

    for (std::size_t level = base.size(); level-- > 0;) {
        const auto& parent = path[level];
        const auto& child = path[level + 1];
        const VertexId beta = base[level];
        std::vector<VertexId> candidates;
        for (std::size_t v = 0; v < n; ++v) {
            if (parent.color[v] == cells[level] && static_cast<VertexId>(v) != beta) {
                candidates.push_back(static_cast<VertexId>(v));
            }
        }
        auto try_candidate = [&](VertexId gamma) -> std::optional<Permutation> {
            const auto image = engine.individualize(parent, gamma);
            if (!child.compatible(image)) {
                return std::nullopt;
            }
            return engine.search(child, image);
        };

        auto in_orbit = orbit_of(beta);
        if (options.workers <= 1) {
            for (VertexId gamma : candidates) {
                if (in_orbit[static_cast<std::size_t>(gamma)]) {
                    continue;
                }
                if (auto sigma = try_candidate(gamma)) {
                    generators.push_back(std::move(*sigma));
                    in_orbit = orbit_of(beta);
                }
            }
        } else {
            std::vector<std::optional<Permutation>> found(candidates.size());
            parallel_for(candidates.size(), options.workers,
                         [&](std::size_t k) { found[k] = try_candidate(candidates[k]); });
            for (std::size_t k = 0; k < candidates.size(); ++k) {
                if (found[k] && !in_orbit[static_cast<std::size_t>(candidates[k])]) {
                    generators.push_back(std::move(*found[k]));
                    in_orbit = orbit_of(beta);
                }
            }
        }
        orbit_sizes[level] = static_cast<std::size_t>(std::count(in_orbit.begin(), in_orbit.end(), true));
        order *= orbit_sizes[level];
    }

    AutGroup group(n, std::move(generators), order);
    group.base_ = std::move(base);
    group.base_orbits_ = std::move(orbit_sizes);
    group.enumerate(options.enumerate_bound);
    return group;
}

std::vector<std::vector<Arc>> arc_orbits(std::span<const Permutation> generators, const Digraph& d)
{
    const auto arcs = d.arcs();
    std::vector<std::size_t> first(d.size() + 1, 0);
    for (std::size_t v = 0; v < d.size(); ++v) {
        first[v + 1] = first[v] + d.out(static_cast<VertexId>(v)).size();
    }
    auto arc_id = [&](VertexId from, VertexId to) {
        const auto outs = d.out(from);
        const auto it = std::find(outs.begin(), outs.end(), to);
        if (it == outs.end()) {
            throw std::invalid_argument("generator does not map arcs to arcs");
        }
        return first[static_cast<std::size_t>(from)] + static_cast<std::size_t>(it - outs.begin());
    };
    UnionFind uf(arcs.size());
    for (const auto& g : generators) {
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            uf.unite(k, arc_id(g(arcs[k].from), g(arcs[k].to)));
        }
    }
    std::vector<std::vector<Arc>> out;
    std::vector<int> slot_of(arcs.size(), -1);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        const auto root = uf.find(k);
        if (slot_of[root] < 0) {
            slot_of[root] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot_of[root])].push_back(arcs[k]);
    }
    return out;
}

std::vector<std::vector<Arc>> arc_orbits(const AutGroup& g, const Digraph& d)
{
    return arc_orbits(g.generators(), d);
}

bool preserves_labels(std::span<const Permutation> generators, const Digraph& d)
{
    for (const auto& g : generators) {
        for (const Arc& a : d.arcs()) {
            if (d.label_of(g(a.from), g(a.to)) != a.label) {
                return false;
            }
        }
    }
    return true;
}

Arc CycleFlag::arc(const Digraph& d) const
{
    const VertexId from = cycle[start];
    const VertexId to = cycle[start + 1];
    return {from, to, d.label_of(from, to).value_or(-1)};
}

std::optional<Permutation> extend_isomorphism(const OrientedCycle4& c, const OrientedCycle4& c2, int rotation,
                                              const Digraph& d)
{
    std::vector<std::pair<VertexId, VertexId>> prescribed;
    for (std::size_t k = 0; k < 4; ++k) {
        prescribed.emplace_back(c[k], c2[k + static_cast<std::size_t>(((rotation % 4) + 4) % 4)]);
    }
    return find_automorphism(d, prescribed);
}

CycleExtender::CycleExtender(const Digraph& d, std::vector<OrientedCycle4> cycles)
    : search_(d), cycles_(std::move(cycles))
{
    const auto root = search_.root();
    states_.reserve(cycles_.size() * 4);
    for (const auto& c : cycles_) {
        for (std::size_t r = 0; r < 4; ++r) {
            auto s = root;
            for (std::size_t k = 0; k < 4; ++k) {
                s = search_.individualize(s, c[k + r]);
            }
            states_.push_back(std::move(s));
        }
    }
}

std::optional<Permutation> CycleExtender::extend(std::size_t c, std::size_t c2, int rotation) const
{
    const auto& left = states_[4 * c];
    const auto& right = states_[4 * c2 + static_cast<std::size_t>(((rotation % 4) + 4) % 4)];
    if (!left.compatible(right)) {
        return std::nullopt;
    }
    return search_.search(left, right);
}

UHReport verify_c4uh(const Digraph& d, const UHOptions& options)
{
    UHReport report;
    auto cycles = enumerate_4cycles(d);
    report.cycle_count = cycles.size();

    const auto group = automorphism_group(d, {.fixed = {}, .workers = options.workers, .enumerate_bound = 0});
    report.aut_order = group.order();
    const auto orbits_of_arcs = arc_orbits(group, d);
    report.arc_orbit_count = orbits_of_arcs.size();
    report.labels_preserved = preserves_labels(group.generators(), d);

    // Flags correspond to arcs when every arc lies on exactly one 4-cycle.
    std::vector<std::size_t> first(d.size() + 1, 0);
    for (std::size_t v = 0; v < d.size(); ++v) {
        first[v + 1] = first[v] + d.out(static_cast<VertexId>(v)).size();
    }
    auto arc_index = [&](VertexId from, VertexId to) -> std::optional<std::size_t> {
        const auto outs = d.out(from);
        const auto it = std::find(outs.begin(), outs.end(), to);
        if (it == outs.end()) {
            return std::nullopt;
        }
        return first[static_cast<std::size_t>(from)] + static_cast<std::size_t>(it - outs.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> flag_of_arc(first.back(), {0, 0}); // (cycle, start)
    {
        std::vector<int> cover(first.back(), 0);
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (const auto idx = arc_index(cycles[c][k], cycles[c][k + 1])) {
                    ++cover[*idx];
                    flag_of_arc[*idx] = {c, k};
                }
            }
        }
        report.flag_arc_bijection =
            !cover.empty() && std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; });
    }
    report.flag_transitive = report.flag_arc_bijection && report.arc_orbit_count == 1;

    const CycleExtender extender(d, cycles);
    auto record = [&](std::size_t c, std::size_t c2, int r) {
        ++report.direct_failed;
        if (report.failures.size() < options.max_failures_reported) {
            report.failures.push_back({cycles[c], cycles[c2], r});
        }
    };

    const std::size_t m = cycles.size();
    report.exhaustive = options.sample == 0 || !report.flag_arc_bijection;
    if (report.exhaustive) {
        const std::size_t total = m * m * 4;
        std::vector<char> ok(total, 0);
        parallel_for(total, options.workers, [&](std::size_t t) {
            ok[t] = extender.extend(t / (4 * m), (t / 4) % m, static_cast<int>(t % 4)).has_value() ? 1 : 0;
        });
        report.direct_checked = total;
        for (std::size_t t = 0; t < total; ++t) {
            if (!ok[t]) {
                record(t / (4 * m), (t / 4) % m, static_cast<int>(t % 4));
            }
        }
        report.pass = m > 0 && report.direct_failed == 0;
        report.sample_agrees = report.pass == report.flag_transitive;
        return report;
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    std::uniform_int_distribution<int> rot(0, 3);
    for (std::size_t s = 0; s < options.sample; ++s) {
        const std::size_t c = pick(rng);
        const std::size_t c2 = pick(rng);
        const int r = rot(rng);
        ++report.direct_checked;
        if (!extender.extend(c, c2, r)) {
            record(c, c2, r);
        }
    }
    report.sample_agrees = !(report.flag_transitive && report.direct_failed > 0);

    if (!report.flag_transitive) {
        // Witness: flags over arcs in two different orbits cannot be related.
        const auto& a0 = orbits_of_arcs[0].front();
        const auto& a1 = orbits_of_arcs[1].front();
        const auto i0 = *arc_index(a0.from, a0.to);
        const auto i1 = *arc_index(a1.from, a1.to);
        const auto [c, k] = flag_of_arc[i0];
        const auto [c2, k2] = flag_of_arc[i1];
        const int r = static_cast<int>((k2 + 4 - k) % 4);
        ++report.direct_checked;
        if (!extender.extend(c, c2, r)) {
            record(c, c2, r);
        }
    }
    report.pass = report.flag_transitive && report.sample_agrees;
    return report;
}

} // namespace fanouh
