#pragma once

#include "qplane/report.hpp"

namespace qplane {

struct SuiteOptions {
    uint64_t seed = 1;
    int N = 512;
    double L = 10.0;
};

// suite names: hopf, oqplane, walgebra, symbols, bqaction, functionals,
// qplane4, oracle, all
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);
SuiteReport run_suite(const std::string& name, const Context& ctx, const SuiteOptions& opt);

}  // namespace qplane
