#ifndef FANOUH_VERIFY_HPP
#define FANOUH_VERIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fanouh/autos.hpp"
#include "fanouh/coxeter.hpp"
#include "fanouh/digraph.hpp"

namespace fanouh {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::vector<Check> checks;
    /// Present when the uh suite ran.
    std::optional<UHReport> uh;

    bool pass() const;
};

enum class Suite { coxeter, digraph, cycles, uh, voltage };

/// "all" expands to every suite in the fixed order; unknown names give nullopt.
std::optional<std::vector<Suite>> parse_selector(std::string_view selector);
std::string_view suite_name(Suite s);

struct VerifyOptions {
    /// Sampled direct extensions; 0 checks all 63504 triples.
    std::size_t sample = 100;
    unsigned workers = 1;
};

std::vector<Check> coxeter_suite(const Graph& g);
std::vector<Check> digraph_suite(const Digraph& d);
std::vector<Check> cycles_suite(const Digraph& d);
std::vector<Check> uh_suite(const Digraph& d, const VerifyOptions& options, UHReport* report = nullptr);
std::vector<Check> voltage_suite(const Digraph& d);

/// Runs the suites against the constructed Coxeter graph and D.
VerificationReport run_verification(std::span<const Suite> suites, const VerifyOptions& options);
VerificationReport run_verification(std::span<const Suite> suites, const Graph& cox, const Digraph& d,
                                    const VerifyOptions& options);

/// `CHECK <name>: PASS|FAIL (<ms>ms)` lines, each failure followed by its detail.
std::string report_text(const VerificationReport& r, bool details = false);
/// {"checks", "summary"}; a uh-only report is the UHReport object with those
/// two keys appended, otherwise the UHReport (if any) sits under "uh".
std::string report_json(const VerificationReport& r);

} // namespace fanouh

#endif
