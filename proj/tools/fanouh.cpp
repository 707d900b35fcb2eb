// Command-line front end: verify the construction, print the x = 0 sub-list,
// export graphs as DOT or JSON.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fanouh/coxeter.hpp"
#include "fanouh/dgraph.hpp"
#include "fanouh/export.hpp"
#include "fanouh/golden.hpp"
#include "fanouh/verify.hpp"
#include "fanouh/voltage.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "fanouh: cannot write " << path << "\n";
        return kExitFail;
    }
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "fanouh: write to " << path << " failed\n";
        return kExitFail;
    }
    return 0;
}

int cmd_table()
{
    const auto& d = fanouh::d_graph();
    std::cout << "adjacency sub-list of D from the vertices yup_0 (out-arcs labelled 1, 2, 0)\n";
    for (const auto& row : fanouh::generated_sublist(d)) {
        std::cout << fanouh::format_row(row) << "\n";
    }
    const auto report = fanouh::golden_sublist_check(d);
    std::cout << "\ndiff against embedded golden table:\n";
    if (report.diffs.empty()) {
        std::cout << "  (empty)\n";
    }
    for (const auto& diff : report.diffs) {
        std::cout << "  " << diff.vertex << " position " << diff.position << ": expected " << diff.expected
                  << ", got " << diff.got << "\n";
    }
    std::cout << "\nerrata applied to the published table (symbols that are not vertices of D):\n";
    for (const auto& e : fanouh::sublist_errata()) {
        std::cout << "  " << e.vertex << " position " << e.position << ": published " << e.published
                  << ", arc rule gives " << e.corrected << "\n";
    }
    return report.pass ? 0 : kExitFail;
}

int cmd_export(const std::string& target, const std::string& format, const std::string& path)
{
    std::string text;
    if (target == "coxeter") {
        const auto g = fanouh::build_coxeter();
        text = format == "dot" ? fanouh::coxeter_dot(g) : fanouh::coxeter_json(g);
    } else if (target == "digraph") {
        const auto& d = fanouh::d_graph();
        text = format == "dot" ? fanouh::digraph_dot(d) : fanouh::digraph_json(d, fanouh::enumerate_4cycles(d));
    } else {
        const auto q = fanouh::quotient(fanouh::d_graph(), fanouh::z7_action());
        text = format == "dot" ? fanouh::quotient_dot(q) : fanouh::quotient_json(q);
    }
    return emit(text, path);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ordered-pencil digraph on 168 vertices: construction, verification, export"};
    app.require_subcommand(1);

    std::string selector;
    std::string verify_format = "text";
    std::string verify_output;
    std::size_t sample = 100;
    unsigned workers = 1;
    bool details = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites: all|coxeter|digraph|cycles|uh|voltage");
    verify->add_option("selector", selector, "Suite selector")->required();
    verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output", verify_output, "Write the report to a file");
    verify->add_option("--sample", sample, "Sampled direct extensions for uh (0 = all 63504)");
    verify->add_option("--workers", workers, "Worker threads for the automorphism search")->check(CLI::Range(1u, 256u));
    verify->add_flag("--details", details, "Print details for passing checks too");

    auto* table = app.add_subcommand("table", "Print the x = 0 adjacency sub-list and its golden diff");

    std::string target;
    std::string export_format = "json";
    std::string export_output;
    auto* exporter = app.add_subcommand("export", "Export coxeter|digraph|quotient as dot or json");
    exporter->add_option("target", target, "What to export")
        ->required()
        ->check(CLI::IsMember({"coxeter", "digraph", "quotient"}));
    exporter->add_option("--format", export_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    exporter->add_option("--output", export_output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            const auto suites = fanouh::parse_selector(selector);
            if (!suites) {
                std::cerr << "fanouh: unknown selector '" << selector << "'\n\n" << verify->help();
                return kExitUsage;
            }
            const auto report = fanouh::run_verification(*suites, {.sample = sample, .workers = workers});
            const std::string text =
                verify_format == "json" ? fanouh::report_json(report) : fanouh::report_text(report, details);
            if (const int rc = emit(text, verify_output); rc != 0) {
                return rc;
            }
            return report.pass() ? 0 : kExitFail;
        }
        if (table->parsed()) {
            return cmd_table();
        }
        if (exporter->parsed()) {
            return cmd_export(target, export_format, export_output);
        }
    } catch (const std::exception& e) {
        std::cerr << "fanouh: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
