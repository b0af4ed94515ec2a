#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qplane/context.hpp"

namespace qplane {

struct CheckResult {
    std::string id;    // stable identifier, fixes report ordering
    std::string law;   // the identity being checked, human readable
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    double gamma = 0.0, alpha = 0.0;
    double tol_exact = 0.0, tol_oracle = 0.0;
    int N = 0;
    double L = 0.0;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double wall_ms = 0.0;  // console output only, never serialized

    bool all_pass() const;
    int failures() const;
};

// stable serialization: excludes wall time so identical runs match byte-wise
std::string report_to_json(const SuiteReport& r);
void report_print(const SuiteReport& r, std::ostream& os, bool verbose);

}  // namespace qplane
