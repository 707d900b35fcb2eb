#include "fanouh/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fanouh {

Permutation::Permutation(std::vector<VertexId> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (VertexId v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("image array is not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<VertexId> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& g) const
{
    std::vector<VertexId> images(images_.size());
    for (std::size_t v = 0; v < images_.size(); ++v) {
        images[v] = g(images_[v]);
    }
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::inverse() const
{
    std::vector<VertexId> images(images_.size());
    for (std::size_t v = 0; v < images_.size(); ++v) {
        images[static_cast<std::size_t>(images_[v])] = static_cast<VertexId>(v);
    }
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::pow(int k) const
{
    Permutation base = k < 0 ? inverse() : *this;
    Permutation out = identity(size());
    for (int e = std::abs(k); e > 0; --e) {
        out = out.then(base);
    }
    return out;
}

bool Permutation::is_identity() const
{
    for (std::size_t v = 0; v < images_.size(); ++v) {
        if (images_[v] != static_cast<VertexId>(v)) {
            return false;
        }
    }
    return true;
}

Digraph::Digraph(std::size_t n) : out_(n), labels_(n), in_(n) {}

void Digraph::add_arc(VertexId from, VertexId to, Label label)
{
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= size() || static_cast<std::size_t>(to) >= size()) {
        throw std::out_of_range("arc endpoint out of range");
    }
    out_[static_cast<std::size_t>(from)].push_back(to);
    labels_[static_cast<std::size_t>(from)].push_back(label);
    in_[static_cast<std::size_t>(to)].push_back(from);
}

std::size_t Digraph::arc_count() const
{
    std::size_t total = 0;
    for (const auto& o : out_) {
        total += o.size();
    }
    return total;
}

bool Digraph::has_arc(VertexId from, VertexId to) const
{
    const auto o = out(from);
    return std::find(o.begin(), o.end(), to) != o.end();
}

std::optional<Label> Digraph::label_of(VertexId from, VertexId to) const
{
    const auto o = out(from);
    for (std::size_t k = 0; k < o.size(); ++k) {
        if (o[k] == to) {
            return labels_[static_cast<std::size_t>(from)][k];
        }
    }
    return std::nullopt;
}

std::vector<Arc> Digraph::arcs() const
{
    std::vector<Arc> out;
    out.reserve(arc_count());
    for (std::size_t v = 0; v < size(); ++v) {
        for (std::size_t k = 0; k < out_[v].size(); ++k) {
            out.push_back({static_cast<VertexId>(v), out_[v][k], labels_[v][k]});
        }
    }
    return out;
}

Digraph Digraph::retargeted(VertexId from, std::size_t pos, VertexId to) const
{
    Digraph r(size());
    for (std::size_t v = 0; v < size(); ++v) {
        for (std::size_t k = 0; k < out_[v].size(); ++k) {
            const bool hit = static_cast<VertexId>(v) == from && k == pos;
            r.add_arc(static_cast<VertexId>(v), hit ? to : out_[v][k], labels_[v][k]);
        }
    }
    return r;
}

Digraph Digraph::induced(std::span<const VertexId> keep) const
{
    std::vector<int> rename(size(), -1);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        rename[static_cast<std::size_t>(keep[k])] = static_cast<int>(k);
    }
    Digraph d(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        const auto v = static_cast<std::size_t>(keep[k]);
        for (std::size_t j = 0; j < out_[v].size(); ++j) {
            const int t = rename[static_cast<std::size_t>(out_[v][j])];
            if (t >= 0) {
                d.add_arc(static_cast<VertexId>(k), t, labels_[v][j]);
            }
        }
    }
    return d;
}

Digraph Digraph::without_out_arcs(VertexId v) const
{
    Digraph d(size());
    for (const Arc& a : arcs()) {
        if (a.from != v) {
            d.add_arc(a.from, a.to, a.label);
        }
    }
    return d;
}

void Graph::add_edge(VertexId u, VertexId v)
{
    if (u == v) {
        throw std::invalid_argument("loops are not allowed");
    }
    if (adjacent(u, v)) {
        return;
    }
    auto insert = [](std::vector<VertexId>& list, VertexId w) {
        list.insert(std::upper_bound(list.begin(), list.end(), w), w);
    };
    insert(adj_[static_cast<std::size_t>(u)], v);
    insert(adj_[static_cast<std::size_t>(v)], u);
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& a : adj_) {
        total += a.size();
    }
    return total / 2;
}

bool Graph::adjacent(VertexId u, VertexId v) const
{
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (VertexId v : adj_[u]) {
            if (static_cast<VertexId>(u) < v) {
                out.emplace_back(static_cast<VertexId>(u), v);
            }
        }
    }
    return out;
}

Graph Graph::retargeted(VertexId u, VertexId v, VertexId w) const
{
    Graph g(size());
    for (const auto& [a, b] : edges()) {
        if ((a == u && b == v) || (a == v && b == u)) {
            g.add_edge(u, w);
        } else {
            g.add_edge(a, b);
        }
    }
    return g;
}

Digraph Graph::as_digraph() const
{
    Digraph d(size());
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (VertexId v : adj_[u]) {
            d.add_arc(static_cast<VertexId>(u), v, 0);
        }
    }
    return d;
}

std::size_t strong_component_count(const Digraph& d)
{
    const std::size_t n = d.size();
    std::vector<int> index(n, -1);
    std::vector<int> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::size_t components = 0;
    int counter = 0;

    struct Frame {
        VertexId v;
        std::size_t next;
    };
    std::vector<Frame> calls;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] >= 0) {
            continue;
        }
        calls.push_back({static_cast<VertexId>(root), 0});
        while (!calls.empty()) {
            Frame& f = calls.back();
            const auto v = static_cast<std::size_t>(f.v);
            if (f.next == 0 && index[v] < 0) {
                index[v] = low[v] = counter++;
                stack.push_back(f.v);
                on_stack[v] = true;
            }
            const auto outs = d.out(f.v);
            if (f.next < outs.size()) {
                const auto w = static_cast<std::size_t>(outs[f.next++]);
                if (index[w] < 0) {
                    calls.push_back({static_cast<VertexId>(w), 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                } while (w != f.v);
                ++components;
            }
            calls.pop_back();
            if (!calls.empty()) {
                const auto parent = static_cast<std::size_t>(calls.back().v);
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return components;
}

bool strongly_connected(const Digraph& d)
{
    return d.size() > 0 && strong_component_count(d) == 1;
}

} // namespace fanouh
