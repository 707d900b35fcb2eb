#include "fanouh/golden.hpp"

#include <sstream>

namespace fanouh {

namespace {

// Transcribed from the published table; do not edit.
constexpr std::string_view kPublished = R"(
124_0 : 165_3, 325_6, 364_5
142_0 : 156_3, 346_5, 352_6
235_0 : 214_6, 634_1, 615_6
253_0 : 241_6, 651_4, 643_6
346_0 : 352_1, 142_5, 156_2
364_0 : 325_1, 165_2, 124_5
156_0 : 142_3, 352_4, 346_2
165_0 : 124_3, 364_2, 325_4
214_0 : 235_6, 615_3, 634_5
241_0 : 253_6, 643_5, 651_3
325_0 : 364_1, 124_6, 165_1
352_0 : 346_1, 156_4, 142_1
436_0 : 412_5, 532_1, 516_2
463_0 : 421_5, 561_2, 523_1
516_0 : 532_4, 412_3, 436_2
561_0 : 523_4, 463_2, 421_3
412_0 : 436_5, 516_3, 532_6
421_0 : 463_5, 523_6, 561_3
523_0 : 561_4, 421_6, 463_4
532_0 : 516_4, 436_1, 412_4
634_0 : 615_2, 235_1, 214_5
643_0 : 651_2, 241_5, 253_1
615_0 : 634_2, 214_3, 235_4
651_0 : 643_2, 253_4, 241_3
)";

std::vector<SublistRow> parse_table(std::string_view text)
{
    std::vector<SublistRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        SublistRow row;
        std::istringstream fields(line);
        std::string colon;
        fields >> row.vertex >> colon;
        for (auto& s : row.successors) {
            fields >> s;
            if (!s.empty() && s.back() == ',') {
                s.pop_back();
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

const std::vector<SublistRow>& published_sublist()
{
    static const std::vector<SublistRow> rows = parse_table(kPublished);
    return rows;
}

const std::vector<Erratum>& sublist_errata()
{
    // Each published subscript lies on its own line, so the symbol is not a vertex.
    static const std::vector<Erratum> errata{
        {"235_0", 2, "615_6", "615_4"},
        {"253_0", 2, "643_6", "643_1"},
        {"325_0", 2, "165_1", "165_4"},
        {"352_0", 2, "142_1", "142_6"},
        {"523_0", 2, "463_4", "463_1"},
        {"532_0", 2, "412_4", "412_6"},
    };
    return errata;
}

std::vector<SublistRow> corrected_sublist()
{
    auto rows = published_sublist();
    for (const auto& e : sublist_errata()) {
        for (auto& row : rows) {
            if (row.vertex == e.vertex && row.successors[e.position] == e.published) {
                row.successors[e.position] = e.corrected;
            }
        }
    }
    return rows;
}

std::vector<SublistRow> generated_sublist(const Digraph& d)
{
    std::vector<SublistRow> rows;
    for (const auto& published : published_sublist()) {
        SublistRow row;
        row.vertex = published.vertex;
        const auto v = static_cast<VertexId>(vertex_index(parse_compact(published.vertex)));
        const auto outs = d.out(v);
        for (std::size_t k = 0; k < 3; ++k) {
            row.successors[k] = k < outs.size() ? compact_string(vertex_at(static_cast<std::size_t>(outs[k]))) : "-";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_row(const SublistRow& row)
{
    return row.vertex + " : " + row.successors[0] + ", " + row.successors[1] + ", " + row.successors[2];
}

SublistReport compare_sublist(const Digraph& d, const std::vector<SublistRow>& expected)
{
    SublistReport report;
    const auto got = generated_sublist(d);
    for (std::size_t r = 0; r < expected.size(); ++r) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (got[r].successors[k] != expected[r].successors[k]) {
                report.diffs.push_back({expected[r].vertex, k, expected[r].successors[k], got[r].successors[k]});
            }
        }
    }
    report.pass = report.diffs.empty();
    return report;
}

SublistReport golden_sublist_check(const Digraph& d)
{
    return compare_sublist(d, corrected_sublist());
}

SublistReport verbatim_sublist_check(const Digraph& d)
{
    return compare_sublist(d, published_sublist());
}

const std::array<std::array<std::string_view, 4>, 6>& published_symbol_grid()
{
    static const std::array<std::array<std::string_view, 4>, 6> grid{{
        {"124", "235", "346", "156"},
        {"142", "253", "364", "165"},
        {"214", "325", "436", "516"},
        {"241", "352", "463", "561"},
        {"412", "523", "634", "615"},
        {"421", "532", "643", "651"},
    }};
    return grid;
}

} // namespace fanouh
