#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "adsflat/lift.hpp"
#include "adsflat/report.hpp"
#include "adsflat/splitquat.hpp"

namespace adsflat {

struct GridSpec {
    double u0 = -2, u1 = 2, v0 = -2, v1 = 2;
    double hu = 0.02, hv = 0.02;

    int nu() const { return static_cast<int>(std::lround((u1 - u0) / hu)); }
    int nv() const { return static_cast<int>(std::lround((v1 - v0) / hv)); }
    double u(int iu) const { return u0 + hu * iu; }
    double v(int iv) const { return v0 + hv * iv; }
};

struct FormsSample {
    double E = 0, F = 0, G = 0;   // first
    double e = 0, f2 = 0, g = 0;  // second
    double l = 0, m = 0, n = 0;   // third
};

// f(u,v) = a1(u) conj(a2(v)), N = a1(u) j conj(a2(v)), with
// omega1 = omega^{a1} and omega2 = pi - omega^{a2}.
struct FlatSurfacePatch {
    AsymptoticCurve a1, a2;
    GridSpec grid;
    std::vector<double> omega1;  // per u node
    std::vector<double> omega2;  // per v node
    std::vector<SplitQuat> f, N;  // row-major, index iu * (nv+1) + iv

    const SplitQuat& f_node(int iu, int iv) const { return f[iu * (grid.nv() + 1) + iv]; }
    const SplitQuat& N_node(int iu, int iv) const { return N[iu * (grid.nv() + 1) + iv]; }

    // Off-grid evaluation straight from the generating curves.
    SplitQuat f_at(double u, double v) const;
    SplitQuat N_at(double u, double v) const;
    double omega1_at(double u) const { return a1.omega_at(u); }
    double omega2_at(double v) const { return M_PI - a2.omega_at(v); }
};

// Left-translates the curves so a1(0) = a2(0) = 1 (hence f(0,0) = 1,
// N(0,0) = j), checks sin(omega1 + omega2) > 0 on all nodes, fills the grids.
FlatSurfacePatch synthesize(const AsymptoticCurve& a1, const AsymptoticCurve& a2,
                            const GridSpec& grid);
FlatSurfacePatch synthesize_serial(const AsymptoticCurve& a1, const AsymptoticCurve& a2,
                                   const GridSpec& grid);

// f(u,0) and conj(f(0,v)) resampled from the patch grid.
std::pair<AsymptoticCurve, AsymptoticCurve> extract_asymptotic_curves(
    const FlatSurfacePatch& patch);

FormsSample closed_forms(double omega1, double omega2);

FormsSample measured_forms(const FlatSurfacePatch& patch, double u, double v,
                           double h = 1e-3);

struct GWResidual {
    double fuu = 0, fuv = 0, fvv = 0, Nu = 0, Nv = 0;
    double max() const;
};
GWResidual gauss_weingarten_residual(const FlatSurfacePatch& patch, double u, double v,
                                     double h = 1e-3);

// x = X1(u) + X2(v), y = Y1(u) - Y2(v) with X1' = cos omega1, Y1' = sin omega1,
// X2' = cos omega2, Y2' = sin omega2, all zeroed at parameter 0.
struct CoordinateChart {
    Sampled1D X1, Y1, X2, Y2;
    double x(double u, double v) const { return X1.at(u) + X2.at(v); }
    double y(double u, double v) const { return Y1.at(u) - Y2.at(v); }
};
CoordinateChart coordinate_chart(const Sampled1D& omega1, const Sampled1D& omega2);

enum class CompletenessVerdict { certified, suspected_incomplete, unknown };
const char* to_string(CompletenessVerdict v);

struct CompletenessCertificate {
    CompletenessVerdict verdict = CompletenessVerdict::unknown;
    double c1 = 0, c2 = 0;       // inf/sup of omega1+omega2 over sampled nodes
    double margin = 0;
    double witness_length = 0;   // length of the candidate finite-length path
    double witness_tail = 0;     // length contribution of the last decade
    std::string witness;
};

// Certify via 0 < c1 <= omega1+omega2 <= c2 < pi, else search monotone
// staircase/diagonal grid paths for a finite-length escape to the far corner.
CompletenessCertificate completeness_check(const Sampled1D& omega1,
                                           const Sampled1D& omega2,
                                           double margin = 1e-6,
                                           double tail_tol = 1e-3);

struct TorusRecord {
    ClosureRecord closure1, closure2;
    bool torus = false;
    double beta1_min_speed = 0, beta2_min_speed = 0;
    double beta1_closure = 0, beta2_closure = 0;
    double beta_identity_residual = 0;  // conj(beta) beta' = -2 a conj(a')
};
TorusRecord torus_check(const FlatSurfacePatch& patch);

// Full residual scan: forms agreement, Gauss-Weingarten, normal identity,
// asymptotic directions, chart gradient, isometry, on-manifold drift.
std::vector<CheckResult> verify_patch(const FlatSurfacePatch& patch,
                                      bool parallel = true);

void export_csv(const FlatSurfacePatch& patch, const std::string& path);
void export_obj(const FlatSurfacePatch& patch, const std::string& path,
                bool hopf_projection = false);

}  // namespace adsflat
