#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jtlab/io.hpp"
#include "jtlab/triple.hpp"

namespace jtlab {

struct SuiteOptions {
    int samples = 20;
    std::uint64_t seed = 42;
    double fd_step = 1e-5;
    double tol = 1e-6;
    double gap_tol = 0.05;
};

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false; // max_residual < tolerance
};

struct SuiteReport {
    std::string suite;
    Descriptor desc;
    SuiteOptions opts;
    std::vector<CheckResult> checks;
    bool all_pass = false;
    double wall_time_ms = 0.0;
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

// Stable-ordered catalogue of the available suites.
const std::vector<SuiteInfo>& suite_list();

// The negative suite reports non-member maps with their true residuals, so its
// checks fail by design and all_pass is false.
SuiteReport run_suite(const std::string& name, const Descriptor& desc, const SuiteOptions& opts);

// Schema version "1"; wall_time_ms is the last and only non-deterministic field.
Json report_to_json(const SuiteReport& r);

} // namespace jtlab
