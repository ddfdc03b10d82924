#pragma once

#include <string>

#include "adsflat/splitquat.hpp"

namespace adsflat {

// Pure imaginary axis rho, normalized so <rho,rho> in {-1,0,1}; lightlike axes
// are scaled by <rho, i> = -1 or +1 instead.
struct HopfAxis {
    SplitQuat rho;
    int norm_class = -1;  // value of <rho,rho> after normalization

    explicit HopfAxis(const SplitQuat& raw, double tol = 1e-9);
};

enum class BaseManifold { S21, H2_plus, H2_minus, Lambda2_plus, Lambda2_minus };

const char* to_string(BaseManifold b);

// Pair (gamma, nu) in the unit tangent bundle TU(H^2).
struct LegendrianPoint {
    SplitQuat gamma;
    SplitQuat nu;
};

// h_rho(z) = z rho conj(z).
SplitQuat hopf_map(const HopfAxis& axis, const AdSPoint& z);

// pi(z) = (z i conj(z), z k conj(z)); pi(-z) = pi(z).
LegendrianPoint double_cover(const AdSPoint& z);

BaseManifold classify_base(const HopfAxis& axis);

// z0 e^{t rho}, staying in the fiber of h_rho through z0.
AdSPoint fiber(const HopfAxis& axis, const AdSPoint& z0, double t);

}  // namespace adsflat
