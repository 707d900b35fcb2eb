#ifndef FANOUH_GOLDEN_HPP
#define FANOUH_GOLDEN_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fanouh/digraph.hpp"

namespace fanouh {

/// One row "yup_0 : n1, n2, n0" of the published x = 0 adjacency sub-list.
struct SublistRow {
    std::string vertex;
    std::array<std::string, 3> successors;
};

/// A published entry that names no vertex of D, with the value the arc rule gives.
struct Erratum {
    std::string vertex;
    std::size_t position;
    std::string published;
    std::string corrected;
};

/// The 24 rows exactly as published, in published order.
const std::vector<SublistRow>& published_sublist();

/// Entries of the published table that are not vertices of D.
const std::vector<Erratum>& sublist_errata();

/// Published table with the errata applied.
std::vector<SublistRow> corrected_sublist();

/// Rows of `d` for the published vertices, in published order.
std::vector<SublistRow> generated_sublist(const Digraph& d);

std::string format_row(const SublistRow& row);

struct SublistDiff {
    std::string vertex;
    std::size_t position;
    std::string expected;
    std::string got;
};

struct SublistReport {
    bool pass = false;
    std::vector<SublistDiff> diffs;
};

SublistReport compare_sublist(const Digraph& d, const std::vector<SublistRow>& expected);

/// Against the errata-corrected table.
SublistReport golden_sublist_check(const Digraph& d);

/// Against the table as published.
SublistReport verbatim_sublist_check(const Digraph& d);

/// The published j_i grid: grid[row][column] for rows a..f and columns j = 0, 1, 2, 4.
inline constexpr std::array<int, 4> kSymbolColumns{0, 1, 2, 4};
const std::array<std::array<std::string_view, 4>, 6>& published_symbol_grid();

} // namespace fanouh

#endif
