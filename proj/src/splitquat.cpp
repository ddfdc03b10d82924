#include "adsflat/splitquat.hpp"

#include <cmath>

namespace adsflat {

namespace {

// 3x3 determinant of rows r0, r1, r2.
double det3(const double r0[3], const double r1[3], const double r2[3]) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
           r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
           r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

}  // namespace

SplitQuat cross(const AdSPoint& base, const SplitQuat& u, const SplitQuat& v, double tol) {
    const SplitQuat& z = base.q;
    if (std::fabs(inner(z, u)) > tol || std::fabs(inner(z, v)) > tol)
        throw std::invalid_argument("cross: u, v must be tangent at base");

    double rows[3][4] = {{z.re, z.i, z.j, z.k},
                         {u.re, u.i, u.j, u.k},
                         {v.re, v.i, v.j, v.k}};
    // <c, e_m> = det(z, u, v, e_m) = (-1)^{m+1} M_m, with M_m the minor of
    // [z; u; v] deleting column m; invert the metric diag(-1,-1,1,1).
    double M[4];
    for (int m = 0; m < 4; ++m) {
        double r0[3], r1[3], r2[3];
        int c = 0;
        for (int col = 0; col < 4; ++col) {
            if (col == m) continue;
            r0[c] = rows[0][col];
            r1[c] = rows[1][col];
            r2[c] = rows[2][col];
            ++c;
        }
        M[m] = det3(r0, r1, r2);
    }
    return {M[0], -M[1], -M[2], M[3]};
}

SplitQuat exp_fiber(const SplitQuat& rho, double t, double tol) {
    if (std::fabs(rho.re) > tol)
        throw std::invalid_argument("exp_fiber: rho must be pure imaginary");
    double q = inner(rho, rho);
    if (std::fabs(q + 1) <= tol) return SplitQuat{std::cos(t), 0, 0, 0} + rho * std::sin(t);
    if (std::fabs(q - 1) <= tol) return SplitQuat{std::cosh(t), 0, 0, 0} + rho * std::sinh(t);
    if (std::fabs(q) <= tol) return SplitQuat::one() + rho * t;
    throw std::invalid_argument("exp_fiber: <rho,rho> must be -1, 0 or 1, got " +
                                std::to_string(q));
}

}  // namespace adsflat
