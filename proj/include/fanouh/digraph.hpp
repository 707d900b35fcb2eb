#ifndef FANOUH_DIGRAPH_HPP
#define FANOUH_DIGRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fanouh/pencil.hpp"

namespace fanouh {

using VertexId = int;

struct Arc {
    VertexId from = 0;
    VertexId to = 0;
    Label label = 1;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Bijection on {0, ..., n-1} stored as its image array.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument if `images` is not a bijection.
    explicit Permutation(std::vector<VertexId> images);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return images_.size(); }
    VertexId operator()(VertexId v) const { return images_[static_cast<std::size_t>(v)]; }
    const std::vector<VertexId>& images() const { return images_; }

    /// (this.then(g))(v) = g(this(v)).
    Permutation then(const Permutation& g) const;
    Permutation inverse() const;
    Permutation pow(int k) const;
    bool is_identity() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<VertexId> images_;
};

/// Directed graph with per-vertex ordered out-lists. Each out-arc carries a label;
/// the in-lists are derived.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);

    /// Appends an arc; out-list order is insertion order.
    void add_arc(VertexId from, VertexId to, Label label);
    std::size_t size() const { return out_.size(); }
    std::size_t arc_count() const;

    std::span<const VertexId> out(VertexId v) const { return out_[static_cast<std::size_t>(v)]; }
    std::span<const Label> out_labels(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }
    std::span<const VertexId> in(VertexId v) const { return in_[static_cast<std::size_t>(v)]; }

    bool has_arc(VertexId from, VertexId to) const;
    std::optional<Label> label_of(VertexId from, VertexId to) const;

    /// All arcs, ascending by source then out-list position.
    std::vector<Arc> arcs() const;

    /// Copy with the arc at out-list position `pos` of `from` redirected to `to`.
    Digraph retargeted(VertexId from, std::size_t pos, VertexId to) const;
    /// Copy restricted to `keep`, renumbered in the given order.
    Digraph induced(std::span<const VertexId> keep) const;
    /// Copy with every out-arc of v deleted.
    Digraph without_out_arcs(VertexId v) const;

    friend bool operator==(const Digraph& l, const Digraph& r) { return l.out_ == r.out_ && l.labels_ == r.labels_; }

private:
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<Label>> labels_;
    std::vector<std::vector<VertexId>> in_;
};

/// Simple undirected graph; adjacency lists kept sorted.
class Graph {
public:
    explicit Graph(std::size_t n = 0) : adj_(n) {}

    void add_edge(VertexId u, VertexId v);
    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const;
    std::span<const VertexId> neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(VertexId u, VertexId v) const;
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    /// Copy with edge {u, v} replaced by {u, w}.
    Graph retargeted(VertexId u, VertexId v, VertexId w) const;

    /// Symmetric digraph with both orientations of every edge, label 0.
    Digraph as_digraph() const;

private:
    std::vector<std::vector<VertexId>> adj_;
};

/// Number of strong components (iterative Tarjan).
std::size_t strong_component_count(const Digraph& d);
bool strongly_connected(const Digraph& d);

} // namespace fanouh

#endif
