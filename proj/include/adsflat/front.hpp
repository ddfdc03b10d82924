#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adsflat/interp.hpp"
#include "adsflat/splitquat.hpp"

namespace adsflat {

// Wave front in H^2: gamma in H^2, unit normal nu in S^2_1, sampled on a
// common uniform grid. omega, when present, is the continuous angle branch
// with cot(omega) = k_g and sin(omega) = 0 at singular points.
struct FrontCurve {
    SampledQuat gamma;
    SampledQuat nu;
    Sampled1D omega;  // empty until angle_function/prepare_front fills it

    bool has_omega() const { return !omega.v.empty(); }
    bool closed() const { return gamma.closed; }
    double s0() const { return gamma.s0; }
    double h() const { return gamma.h; }
    double period() const { return gamma.period(); }
    double s_end() const { return gamma.s_end(); }
};

struct AngleSample {
    double s;
    double omega;
};

// Projective curvature value: k = cot(omega), infinite where sinw vanishes.
struct CurvatureValue {
    double cosw = 0;
    double sinw = 0;
    bool finite = true;
    double k = 0;  // valid only when finite
};

// Residual check of the Legendrian and unit conditions; throws on violation.
void validate_front(const FrontCurve& front, double tol = 1e-8);

CurvatureValue geodesic_curvature(const FrontCurve& front, double s);

// Orient the front per the positive-normal convention: sin(omega) > 0 for
// regular fronts; cos(omega) = -1 at every singular point for singular fronts
// (which may require reversing the parameter, see notes in front.cpp).
FrontCurve positive_normal(const FrontCurve& front);

// Reparametrize so <gamma',gamma'> + <nu',nu'> = 4 (half Sasaki arc length).
FrontCurve sasaki_reparametrize(const FrontCurve& front);

// Continuous angle branch: (0,pi) for regular fronts, (pi-c, 2pi-c) with the
// sampled range centered for singular ones. Requires positive-normal,
// Sasaki-parametrized input. Throws if the curvature image covers RP^1.
std::vector<AngleSample> angle_function(const FrontCurve& front);

// Full normalization pipeline: Sasaki parameter, base point (i,k) at s = 0,
// positive normal, omega branch filled.
FrontCurve prepare_front(const FrontCurve& front);

// Move the front by the isometry taking (gamma(0), nu(0)) to (i, k).
FrontCurve normalize_base(const FrontCurve& front);

// Integrate the frame equations for prescribed omega(s). Open fronts cover
// [smin, smax] (smin <= 0 <= smax); closed fronts cover one period [0, smax]
// with the step adjusted to land exactly on it.
FrontCurve make_front_from_curvature(const std::function<double(double)>& omega_fn,
                                     double smin, double smax, bool closed,
                                     double h = 1e-3);

// gamma_d = cosh(d) gamma + sinh(d) nu with the transported normal.
FrontCurve parallel_front(const FrontCurve& front, double d);

struct AdmissiblePair {
    FrontCurve g1;  // regular front, role "k1"
    FrontCurve g2;
    bool swapped = false;   // input roles exchanged
    bool flipped2 = false;  // g2 returned with the opposite normal
    double margin = 0;      // angle-space separation margin (radians)
    std::string certificate;
};

class AdmissibilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

AdmissiblePair check_admissible(const FrontCurve& g1, const FrontCurve& g2,
                                int n_samples = 512);

}  // namespace adsflat
