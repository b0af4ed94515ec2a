#include "qplane/report.hpp"

#include <ostream>

#include "json.hpp"

namespace qplane {

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

int SuiteReport::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string report_to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id},
                          {"law", c.law},
                          {"residual", c.residual},
                          {"tol", c.tol},
                          {"pass", c.pass}});
    nlohmann::json j = {{"suite", r.suite},
                        {"context",
                         {{"gamma", r.gamma},
                          {"alpha", r.alpha},
                          {"tol_exact", r.tol_exact},
                          {"tol_oracle", r.tol_oracle},
                          {"N", r.N},
                          {"L", r.L},
                          {"seed", r.seed}}},
                        {"checks", checks},
                        {"failures", r.failures()}};
    return j.dump(2);
}

void report_print(const SuiteReport& r, std::ostream& os, bool verbose) {
    os << "suite " << r.suite << " (gamma=" << r.gamma << ", alpha=" << r.alpha
       << ", seed=" << r.seed << ")\n";
    for (const auto& c : r.checks) {
        if (!verbose && c.pass) continue;
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << "  residual=" << c.residual
           << " tol=" << c.tol << "  " << c.law << "\n";
    }
    os << "  " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks passed, "
       << r.wall_ms << " ms\n";
}

}  // namespace qplane
