#pragma once

#include "stairlab/serialize.hpp"

namespace stairlab {

struct SuiteResult {
    std::string name;
    std::string status; // "pass" | "fail" | "info"
    json details;       // counterexample on failure, counts otherwise
    long elapsed_ms = 0;

    bool ok() const { return status != "fail"; }
};

/// Names accepted by run_suite, in canonical order ("all" excluded).
const std::vector<std::string>& suite_names();

/// Runs one named verification suite.
SuiteResult run_suite(const std::string& name);

/// Runs every suite; fails iff any suite fails.
std::vector<SuiteResult> run_all_suites();

} // namespace stairlab
