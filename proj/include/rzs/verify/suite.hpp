#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rzs/families/catalog.hpp"
#include "rzs/verify/integrals.hpp"
#include "rzs/verify/report.hpp"
#include "rzs/verify/verify.hpp"

namespace rzs::verify {

struct IntegralRange {
    Theorem theorem = Theorem::T1;
    std::vector<int> m;  // ignored for T1 and T3
    std::vector<int> p;
    std::vector<BigRational> z;
    int quadrature_digits = 12;
};

struct SuiteConfig {
    int digits = 50;
    int threads = 0;  // 0 picks the hardware concurrency
    std::vector<families::FamilyRange> families;
    std::vector<IntegralRange> integrals;
    bool golden = false;
    int golden_digits = 30;
    /// Adjudicate every instance whose readings give different right-hand sides.
    bool adjudicate = true;
};

/// The desk-scale grid exercised when no configuration is given.
SuiteConfig default_suite_config();
/// Only the golden tables.
SuiteConfig golden_suite_config();

/// Missing keys mean "none" (an empty object is a valid, empty suite) except
/// digits, threads, golden_digits and adjudicate, which keep their defaults.
/// Integer lists are arrays or {"from": a, "to": b}. Throws invalid_argument.
SuiteConfig suite_config_from_json(const Json& j);
Json to_json(const SuiteConfig& c);
SuiteConfig load_suite_config(const std::string& path);

struct SuiteSummary {
    int pass = 0, fail = 0, skip = 0;
    std::optional<int> worst_digits;  // over PASS/FAIL reports
    std::vector<std::string> contradictions;
    std::string slowest;
    double slowest_ms = 0;
    double total_ms = 0;
};

struct SuiteResult {
    std::vector<VerificationReport> reports;  // catalog order, then integrals, then golden
    std::vector<Adjudication> adjudications;
    SuiteSummary summary;
    std::size_t skipped_grid_points = 0;
    int digits = 50;         // identity and adjudication targets
    int golden_digits = 30;

    bool ok() const { return summary.fail == 0 && summary.contradictions.empty(); }
    int exit_code() const { return ok() ? 0 : 1; }
};

SuiteResult run_suite(const SuiteConfig& c);

/// {"reports": [...], "adjudications": [...], "summary": {...}}. Each value
/// is written with the digits its check targeted (quadrature digits for
/// integrals). Timing fields appear only when include_timing is set.
Json to_json(const SuiteResult& r, bool include_timing);
/// Writes the report; I/O failures throw runtime_error naming the path.
void write_suite_report(const SuiteResult& r, const std::string& path, bool include_timing = true);

/// Removes the timing keys ("elapsed_ms", "slowest", "slowest_ms",
/// "total_ms") at any depth.
Json strip_timing(Json j);

}  // namespace rzs::verify
