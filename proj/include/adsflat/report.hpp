#pragma once

#include <map>
#include <string>
#include <vector>

namespace adsflat {

struct CheckResult {
    std::string name;
    double max_residual = 0;
    double tolerance = 0;
    bool pass = false;
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

// Atomic write (temp file + rename) of { "invariant", "max_residual",
// "tolerance", "pass" } entries plus optional scalar details.
void write_report_json(const std::vector<CheckResult>& checks,
                       const std::map<std::string, double>& details,
                       const std::string& path);

// Atomic plain-text write helper shared by the exporters.
void write_file_atomic(const std::string& path, const std::string& content);

std::string format17(double x);

}  // namespace adsflat
