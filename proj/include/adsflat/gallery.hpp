#pragma once

#include <map>
#include <string>
#include <vector>

#include "adsflat/hopf.hpp"
#include "adsflat/surface.hpp"

namespace adsflat {

struct ScenarioResult {
    std::string name;
    FlatSurfacePatch patch;
    std::vector<CheckResult> checks;
    std::map<std::string, double> details;

    bool pass() const { return all_pass(checks); }
};

// Preimage h_rho^{-1}(sigma): one asymptotic family runs along the fibers of
// h_rho; the fiber front has constant curvature matching the causal dictionary
// |k| > 1 / = 1 / < 1 for <rho,rho> = -1 / 0 / 1.
FlatSurfacePatch hopf_cylinder(const HopfAxis& axis, const FrontCurve& sigma);
ScenarioResult hopf_cylinder_scenario(const HopfAxis& axis, const FrontCurve& sigma);

// Both lifts timelike while the immersion stays regular (k1 = 3, k2 = 1.4).
ScenarioResult dn_q4_counterexample();

// cos(2 omega1) = c0/(1+u^2), omega2 = pi/2 + omega1: complete chart data with
// a finite-length divergent diagonal.
ScenarioResult dn_q2_counterexample(double c0 = 0.99, double T = 1e4);

// Timelike + spacelike unit-speed curves, asymptotically reparametrized and
// synthesized without singular points.
ScenarioResult dn_q1_demo(const AmbientCurve& b1, const AmbientCurve& b2);
ScenarioResult dn_q1_demo_default();

// Registry: "hopf-cylinder", "hopf-torus", "dn-q4", "dn-q2", "dn-q1".
std::vector<std::string> scenario_names();
ScenarioResult run_scenario(const std::string& name,
                            const std::map<std::string, double>& params = {});

}  // namespace adsflat
