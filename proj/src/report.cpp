#include "adsflat/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace adsflat {

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

void write_report_json(const std::vector<CheckResult>& checks,
                       const std::map<std::string, double>& details,
                       const std::string& path) {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    bool pass = true;
    for (const auto& c : checks) {
        j["checks"].push_back({{"invariant", c.name},
                               {"max_residual", c.max_residual},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
        pass = pass && c.pass;
    }
    j["pass"] = pass;
    if (!details.empty()) {
        for (const auto& [k, v] : details) j["details"][k] = v;
    }
    write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace adsflat
