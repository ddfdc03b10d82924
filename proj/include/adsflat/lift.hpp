#pragma once

#include <string>

#include "adsflat/front.hpp"
#include "adsflat/interp.hpp"
#include "adsflat/splitquat.hpp"

namespace adsflat {

// Curve a in H^3_1 in its asymptotic parametrization:
// conj(a) a' = cos(omega) i + sin(omega) k.
struct AsymptoticCurve {
    SampledQuat a;
    Sampled1D omega;       // continuous branch, same grid as a
    bool front_closed = false;
    double front_period = 0;  // period of the underlying front when closed
    int eps = 0;              // monodromy sign a(u+L) = eps a(u); 0 = unknown

    double u0() const { return a.s0; }
    double h() const { return a.h; }
    double u_end() const { return a.s_end(); }

    // Interpolated evaluation; closed curves extend by the monodromy sign.
    SplitQuat at(double u) const;
    double omega_at(double u) const;
};

// Integrate a' = a (cos omega i + sin omega k) from a(0) = sign, over the
// front's domain. The front must be prepared (see prepare_front).
AsymptoticCurve asymptotic_lift(const FrontCurve& front, int sign = +1);

// Ambient curve samples in H^3_1, used as input to asymptotic_reparametrize.
struct AmbientCurve {
    SampledQuat c;
};

// Reparametrize a curve with <c', c j> = 0 so lambda^2 + mu^2 = 1. Also
// returns the new-vs-old parameter map u(s) on the input grid.
struct ReparametrizedCurve {
    AsymptoticCurve curve;
    Sampled1D u_of_s;
};
ReparametrizedCurve asymptotic_reparametrize(const AmbientCurve& c, double tol = 1e-6);

// Recompute the continuous angle from the samples of a (branch fixed by the
// front convention: omega(0) in (0, pi] when sin > 0 throughout, singular
// values pinned at odd multiples of pi otherwise).
Sampled1D angle_of(const AsymptoticCurve& c);

struct ClosureRecord {
    bool closed = false;
    int eps = 0;
    double residual = 0;
};

// Compare a(u0 + L) against +/- a(u0); closed when the best residual <= tol.
ClosureRecord closure_detect(const AsymptoticCurve& c, double L, double tol = 1e-6);

}  // namespace adsflat
