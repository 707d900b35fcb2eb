// Test-side oracles, written independently of the library internals.
#ifndef FANOUH_TESTS_ORACLES_HPP
#define FANOUH_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <vector>

#include "fanouh/digraph.hpp"
#include "fanouh/pencil.hpp"

namespace oracle {

// Raw vertex: x, then b and c indexed by label 0, 1, 2.
struct Raw {
    int x;
    std::array<int, 3> b, c;
};

inline Raw raw(const fanouh::DVertex& v)
{
    Raw r{v.x().value(), {}, {}};
    for (int i = 0; i < 3; ++i) {
        r.b[static_cast<std::size_t>(i)] = v.b(i).value();
        r.c[static_cast<std::size_t>(i)] = v.c(i).value();
    }
    return r;
}

// All seven arc equations with plain integer labels mod 3.
inline std::optional<int> arc_rule(const Raw& u, const Raw& v)
{
    std::optional<int> found;
    for (int i = 0; i < 3; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const auto n = static_cast<std::size_t>((i + 1) % 3);
        const auto p = static_cast<std::size_t>((i + 2) % 3);
        if (u.x == v.c[k] && v.x == u.c[k] && v.b[k] == u.b[k] && v.b[n] == u.c[n] && v.b[p] == u.c[p] &&
            v.c[n] == u.b[p] && v.c[p] == u.b[n]) {
            found = i;
        }
    }
    return found;
}

// Adjacency by brute pair scan over the canonical enumeration.
inline Eigen::MatrixXi adjacency_by_scan()
{
    const auto& vs = fanouh::enumerate_vertices();
    const auto n = static_cast<Eigen::Index>(vs.size());
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (arc_rule(raw(vs[static_cast<std::size_t>(i)]), raw(vs[static_cast<std::size_t>(j)]))) {
                a(i, j) = 1;
            }
        }
    }
    return a;
}

inline Eigen::MatrixXi adjacency(const fanouh::Digraph& d)
{
    const auto n = static_cast<Eigen::Index>(d.size());
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (const auto& arc : d.arcs()) {
        a(arc.from, arc.to) += 1;
    }
    return a;
}

// Closed walks of length k through each vertex, counted with multiplicity.
inline bool has_closed_walk(const Eigen::MatrixXi& a, int k)
{
    Eigen::MatrixXi p = a;
    for (int i = 1; i < k; ++i) {
        p = p * a;
    }
    return p.diagonal().any();
}

} // namespace oracle

#endif
