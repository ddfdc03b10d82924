#include "adsflat/hopf.hpp"

#include <cmath>
#include <stdexcept>

namespace adsflat {

HopfAxis::HopfAxis(const SplitQuat& raw, double tol) {
    if (std::fabs(raw.re) > tol)
        throw std::invalid_argument("HopfAxis: axis must be pure imaginary");
    double q = inner(raw, raw);
    double scale2 = raw.i * raw.i + raw.j * raw.j + raw.k * raw.k;
    if (scale2 <= tol * tol) throw std::invalid_argument("HopfAxis: zero axis");
    if (std::fabs(q) <= tol * scale2) {
        // Lightlike: scale so <rho, i> = -sign(<raw, i>) * 1 = -+1.
        double p = inner(raw, SplitQuat::I());
        if (std::fabs(p) <= tol)
            throw std::invalid_argument("HopfAxis: lightlike axis with <rho,i> = 0");
        rho = raw * (1.0 / std::fabs(p));
        norm_class = 0;
    } else {
        rho = raw * (1.0 / std::sqrt(std::fabs(q)));
        norm_class = q < 0 ? -1 : 1;
    }
}

const char* to_string(BaseManifold b) {
    switch (b) {
        case BaseManifold::S21: return "S21";
        case BaseManifold::H2_plus: return "H2+";
        case BaseManifold::H2_minus: return "H2-";
        case BaseManifold::Lambda2_plus: return "Lambda2+";
        default: return "Lambda2-";
    }
}

SplitQuat hopf_map(const HopfAxis& axis, const AdSPoint& z) {
    return z.q * axis.rho * conj(z.q);
}

LegendrianPoint double_cover(const AdSPoint& z) {
    return {z.q * SplitQuat::I() * conj(z.q), z.q * SplitQuat::K() * conj(z.q)};
}

BaseManifold classify_base(const HopfAxis& axis) {
    if (axis.norm_class == 1) return BaseManifold::S21;
    // <i, i> = -1: the sheet through h_rho(1) = rho has x1 of sign -<rho, i>
    double p = -inner(axis.rho, SplitQuat::I());
    if (axis.norm_class == -1)
        return p > 0 ? BaseManifold::H2_plus : BaseManifold::H2_minus;
    return p > 0 ? BaseManifold::Lambda2_plus : BaseManifold::Lambda2_minus;
}

AdSPoint fiber(const HopfAxis& axis, const AdSPoint& z0, double t) {
    return AdSPoint(z0.q * exp_fiber(axis.rho, t));
}

}  // namespace adsflat
