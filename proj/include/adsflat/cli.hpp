#pragma once

#include <map>
#include <string>
#include <vector>

#include "adsflat/front.hpp"
#include "adsflat/surface.hpp"

namespace adsflat {

// Exit codes: 0 all checks pass, 1 a check failed (report still written),
// 2 malformed configuration or unreadable input.
struct RunConfig {
    std::string command;  // selftest | lift | surface | torus | scenario | export
    std::string front1, front2;          // curve spec JSON paths
    std::string scenario_name;
    std::map<std::string, double> scenario_params;
    std::string grid_u, grid_v;          // "min:max:step"
    std::map<std::string, double> tol;
    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv", "obj", "report"};
    int sign = +1;
};

int run(const RunConfig& config);

// Parse a curve specification JSON (see README for the schema) into a
// prepared front.
FrontCurve front_from_spec_file(const std::string& path);
FrontCurve front_from_spec_json_text(const std::string& text);

GridSpec parse_grid(const std::string& grid_u, const std::string& grid_v);

int main_cli(int argc, char** argv);

}  // namespace adsflat
