#include "fanouh/coxeter.hpp"

#include <algorithm>
#include <deque>

#include "fanouh/autos.hpp"

namespace fanouh {

CoxVertex::CoxVertex(Point x, Line seconds) : x_(x), seconds_(seconds)
{
    if (seconds_.contains(x_)) {
        throw NotALine("base point " + std::to_string(x_.value()) + " lies on " + seconds_.to_string());
    }
}

std::array<std::pair<Point, Point>, 3> CoxVertex::entries() const
{
    std::array<std::pair<Point, Point>, 3> out;
    for (std::size_t k = 0; k < 3; ++k) {
        const Point b = seconds_.points()[k];
        out[k] = {b, third_point(x_, b)};
    }
    return out;
}

std::string CoxVertex::to_string() const
{
    std::string s = "[" + std::to_string(x_.value());
    for (const auto& [b, c] : entries()) {
        s += ',';
        s += static_cast<char>('0' + b.value());
        s += static_cast<char>('0' + c.value());
    }
    return s + "]";
}

const std::vector<CoxVertex>& cox_vertices()
{
    static const std::vector<CoxVertex> vertices = [] {
        std::vector<CoxVertex> out;
        for (int x = 0; x < 7; ++x) {
            for (int j = 0; j < 7; ++j) {
                const Line l = line(Point(j));
                if (!l.contains(Point(x))) {
                    out.emplace_back(Point(x), l);
                }
            }
        }
        return out;
    }();
    return vertices;
}

std::size_t cox_index(const CoxVertex& v)
{
    const auto& all = cox_vertices();
    return static_cast<std::size_t>(std::find(all.begin(), all.end(), v) - all.begin());
}

CoxVertex unordered(const DVertex& v)
{
    return CoxVertex(v.x(), v.b().line());
}

CoxVertex translate(const CoxVertex& v, int t)
{
    const auto g = Collineation::translation(t);
    return CoxVertex(g(v.x()), g(v.seconds()));
}

bool cox_adjacent(const CoxVertex& p, const CoxVertex& q)
{
    if (p == q) {
        return false;
    }
    const auto mine = p.entries();
    auto theirs = q.entries();
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
        std::array<Point, 3> d;
        int shared_edges = 0;
        bool ok = true;
        for (std::size_t k = 0; k < 3 && ok; ++k) {
            const auto [b, c] = mine[k];
            const auto [b2, c2] = theirs[perm[k]];
            int common = 0;
            for (Point s : {b, c}) {
                if (s == b2 || s == c2) {
                    d[k] = s;
                    ++common;
                }
            }
            if (common != 1) {
                ok = false;
            } else if (b == b2 && c == q.x() && c2 == p.x()) {
                ++shared_edges;
            } else if (c != b2) {
                ok = false;
            }
        }
        if (ok && shared_edges == 1 && is_line(d[0], d[1], d[2])) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph build_coxeter()
{
    const auto& vertices = cox_vertices();
    Graph g(vertices.size());
    for (std::size_t u = 0; u < vertices.size(); ++u) {
        for (std::size_t v = u + 1; v < vertices.size(); ++v) {
            if (cox_adjacent(vertices[u], vertices[v])) {
                g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
            }
        }
    }
    return g;
}

namespace {

struct Bfs {
    std::vector<int> dist;
    std::vector<VertexId> parent;
};

Bfs bfs(const Graph& g, VertexId root)
{
    Bfs out{std::vector<int>(g.size(), -1), std::vector<VertexId>(g.size(), -1)};
    std::deque<VertexId> queue{root};
    out.dist[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (out.dist[static_cast<std::size_t>(w)] < 0) {
                out.dist[static_cast<std::size_t>(w)] = out.dist[static_cast<std::size_t>(u)] + 1;
                out.parent[static_cast<std::size_t>(w)] = u;
                queue.push_back(w);
            }
        }
    }
    return out;
}

} // namespace

std::optional<std::vector<VertexId>> shortest_cycle(const Graph& g)
{
    std::optional<std::vector<VertexId>> best;
    for (std::size_t r = 0; r < g.size(); ++r) {
        const auto tree = bfs(g, static_cast<VertexId>(r));
        for (const auto& [u, w] : g.edges()) {
            const auto su = static_cast<std::size_t>(u);
            const auto sw = static_cast<std::size_t>(w);
            if (tree.dist[su] < 0 || tree.parent[su] == w || tree.parent[sw] == u) {
                continue;
            }
            const auto length = static_cast<std::size_t>(tree.dist[su] + tree.dist[sw] + 1);
            if (best && best->size() <= length) {
                continue;
            }
            std::vector<VertexId> left;
            std::vector<VertexId> right;
            for (VertexId x = u; x >= 0; x = tree.parent[static_cast<std::size_t>(x)]) {
                left.push_back(x);
            }
            for (VertexId x = w; x >= 0; x = tree.parent[static_cast<std::size_t>(x)]) {
                right.push_back(x);
            }
            // Only closed when the two tree paths share nothing but the root.
            std::vector<VertexId> a(left.begin(), left.end() - 1);
            std::vector<VertexId> b(right.begin(), right.end() - 1);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::vector<VertexId> both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            if (!both.empty()) {
                continue;
            }
            std::vector<VertexId> cycle(left.rbegin(), left.rend());
            cycle.insert(cycle.end(), right.begin(), right.end() - 1);
            best = std::move(cycle);
        }
    }
    return best;
}

bool connected(const Graph& g)
{
    if (g.size() == 0) {
        return false;
    }
    const auto tree = bfs(g, 0);
    return std::none_of(tree.dist.begin(), tree.dist.end(), [](int d) { return d < 0; });
}

std::optional<int> diameter(const Graph& g)
{
    int best = 0;
    for (std::size_t r = 0; r < g.size(); ++r) {
        const auto tree = bfs(g, static_cast<VertexId>(r));
        for (int d : tree.dist) {
            if (d < 0) {
                return std::nullopt;
            }
            best = std::max(best, d);
        }
    }
    return best;
}

std::string IntersectionArray::to_string() const
{
    std::string s = "{";
    for (std::size_t k = 0; k < b.size(); ++k) {
        s += (k ? "," : "") + std::to_string(b[k]);
    }
    s += ";";
    for (std::size_t k = 0; k < c.size(); ++k) {
        s += (k ? "," : "") + std::to_string(c[k]);
    }
    return s + "}";
}

std::optional<IntersectionArray> intersection_array(const Graph& g)
{
    const auto diam = diameter(g);
    if (!diam) {
        return std::nullopt;
    }
    const auto d = static_cast<std::size_t>(*diam);
    std::vector<int> b(d + 1, -1);
    std::vector<int> c(d + 1, -1);
    for (std::size_t r = 0; r < g.size(); ++r) {
        const auto tree = bfs(g, static_cast<VertexId>(r));
        for (std::size_t u = 0; u < g.size(); ++u) {
            const int i = tree.dist[u];
            int up = 0;
            int down = 0;
            for (VertexId w : g.neighbors(static_cast<VertexId>(u))) {
                const int dw = tree.dist[static_cast<std::size_t>(w)];
                up += dw == i + 1;
                down += dw == i - 1;
            }
            const auto si = static_cast<std::size_t>(i);
            if ((b[si] >= 0 && b[si] != up) || (c[si] >= 0 && c[si] != down)) {
                return std::nullopt;
            }
            b[si] = up;
            c[si] = down;
        }
    }
    return IntersectionArray{{b.begin(), b.end() - 1}, {c.begin() + 1, c.end()}};
}

bool ValidationReport::pass() const
{
    return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

ValidationReport validate_coxeter(const Graph& g)
{
    ValidationReport report;
    auto add = [&](std::string name, bool pass, std::string detail) {
        report.entries.push_back({std::move(name), pass, std::move(detail)});
    };

    bool cubic = g.size() > 0;
    std::string off_degree;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.neighbors(static_cast<VertexId>(v)).size() != 3) {
            cubic = false;
            if (off_degree.empty()) {
                off_degree = "vertex " + std::to_string(v) + " has degree " +
                             std::to_string(g.neighbors(static_cast<VertexId>(v)).size());
            }
        }
    }
    add("cubic", cubic, cubic ? std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) + " edges"
                              : off_degree);

    const bool is_connected = connected(g);
    add("connected", is_connected, is_connected ? "single component" : "more than one component");

    const auto cycle = shortest_cycle(g);
    report.girth = cycle ? static_cast<int>(cycle->size()) : 0;
    if (cycle) {
        report.girth_witness = *cycle;
    }
    std::string witness;
    for (VertexId v : report.girth_witness) {
        witness += (witness.empty() ? "" : " ") + std::to_string(v);
    }
    add("girth 7", report.girth == 7, "girth " + std::to_string(report.girth) + ", witness cycle " + witness);

    report.diameter = diameter(g).value_or(-1);
    const auto array = intersection_array(g);
    const IntersectionArray expected{{3, 2, 2, 1}, {1, 1, 1, 2}};
    add("distance-regular", array && *array == expected,
        array ? "intersection array " + array->to_string() + ", diameter " + std::to_string(report.diameter)
              : "not distance-regular");

    const auto as_digraph = g.as_digraph();
    const auto group = automorphism_group(as_digraph, {.fixed = {}, .workers = 1, .enumerate_bound = 0});
    report.aut_order = group.order();
    add("automorphism group order 336", group.order() == 336, "|Aut| = " + std::to_string(group.order()));

    const auto vertex_orbits = group.vertex_orbits();
    add("vertex-transitive", vertex_orbits.size() == 1,
        std::to_string(vertex_orbits.size()) + " vertex orbit(s) under Aut");
    return report;
}

} // namespace fanouh
