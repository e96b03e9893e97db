#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linrel/field.hpp"

namespace linrel {

// Configuration of a verification run. Identical configs produce identical
// generated instances and byte-identical reports.
struct RunConfig {
    std::uint64_t seed = 1;
    std::uint64_t trials = 200;
    std::vector<FieldSpec> fields = {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5),
                                     FieldSpec::rationals()};
    std::size_t max_dim = 3;       // per space
    bool with_oracle = false;      // exhaustive cross-checks on tiny prime-field instances
    std::vector<std::string> suites;  // empty means all
};

struct Failure {
    std::string description;
    // (label, relation file text): a reproducer that fails in isolation.
    std::vector<std::pair<std::string, std::string>> reproducers;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

// All suite names, in report order.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const RunConfig& cfg);
std::vector<SuiteResult> run_verification(const RunConfig& cfg);

// Deterministic plain-text report; collates per-suite lines in fixed order.
std::string render_report(const RunConfig& cfg, const std::vector<SuiteResult>& results);

} // namespace linrel
