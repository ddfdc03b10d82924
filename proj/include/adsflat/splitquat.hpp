#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace adsflat {

// Element a + b i + c j + d k of R^4_2 with metric -dx0^2 - dx1^2 + dx2^2 + dx3^2.
// The product follows i^2 = -1, j^2 = k^2 = 1, ij = k = -ji, jk = -i = -kj,
// ki = j = -ik, so {1, i} spans the negative-definite plane.
struct SplitQuat {
    double re = 0.0;
    double i = 0.0;
    double j = 0.0;
    double k = 0.0;

    constexpr SplitQuat() = default;
    constexpr SplitQuat(double re_, double i_, double j_, double k_)
        : re(re_), i(i_), j(j_), k(k_) {}

    static constexpr SplitQuat one() { return {1, 0, 0, 0}; }
    static constexpr SplitQuat I() { return {0, 1, 0, 0}; }
    static constexpr SplitQuat J() { return {0, 0, 1, 0}; }
    static constexpr SplitQuat K() { return {0, 0, 0, 1}; }

    constexpr SplitQuat operator+(const SplitQuat& o) const {
        return {re + o.re, i + o.i, j + o.j, k + o.k};
    }
    constexpr SplitQuat operator-(const SplitQuat& o) const {
        return {re - o.re, i - o.i, j - o.j, k - o.k};
    }
    constexpr SplitQuat operator-() const { return {-re, -i, -j, -k}; }
    constexpr SplitQuat operator*(double c) const { return {re * c, i * c, j * c, k * c}; }
    friend constexpr SplitQuat operator*(double c, const SplitQuat& z) { return z * c; }

    // Euclidean component norm, used only for residual reporting.
    double enorm() const { return std::sqrt(re * re + i * i + j * j + k * k); }
};

constexpr SplitQuat mul(const SplitQuat& z1, const SplitQuat& z2) {
    return {
        z1.re * z2.re - z1.i * z2.i + z1.j * z2.j + z1.k * z2.k,
        z1.re * z2.i + z1.i * z2.re - z1.j * z2.k + z1.k * z2.j,
        z1.re * z2.j + z1.j * z2.re - z1.i * z2.k + z1.k * z2.i,
        z1.re * z2.k + z1.k * z2.re + z1.i * z2.j - z1.j * z2.i,
    };
}

constexpr SplitQuat operator*(const SplitQuat& z1, const SplitQuat& z2) { return mul(z1, z2); }

constexpr SplitQuat conj(const SplitQuat& z) { return {z.re, -z.i, -z.j, -z.k}; }

// <z1, z2> = -Re(z1 conj(z2)) = -x0 y0 - x1 y1 + x2 y2 + x3 y3.
constexpr double inner(const SplitQuat& z1, const SplitQuat& z2) {
    return -z1.re * z2.re - z1.i * z2.i + z1.j * z2.j + z1.k * z2.k;
}

enum class CausalClass { timelike, lightlike, spacelike };

inline const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::timelike: return "timelike";
        case CausalClass::lightlike: return "lightlike";
        default: return "spacelike";
    }
}

inline CausalClass causal_character(const SplitQuat& v, double tol = 1e-12) {
    double q = inner(v, v);
    if (std::fabs(q) <= tol) return CausalClass::lightlike;
    return q < 0 ? CausalClass::timelike : CausalClass::spacelike;
}

// Point of the quadric <z,z> = -1, renormalized on construction.
struct AdSPoint {
    SplitQuat q;

    AdSPoint() : q(SplitQuat::one()) {}
    explicit AdSPoint(const SplitQuat& z) : q(z) {
        double n = z.re * z.re + z.i * z.i - z.j * z.j - z.k * z.k;  // -<z,z>
        if (!(n > 0))
            throw std::invalid_argument("AdSPoint: <z,z> must be negative, got " +
                                        std::to_string(-n));
        // skip the rescale when already normalized so that exact identities
        // (e.g. double_cover(-z) == double_cover(z)) survive bitwise
        if (std::fabs(n - 1.0) > 1e-13) q = z * (1.0 / std::sqrt(n));
    }
};

// Renormalize in place onto <z,z> = -1 (used between integrator steps).
inline SplitQuat renormalize_ads(const SplitQuat& z) {
    double n = z.re * z.re + z.i * z.i - z.j * z.j - z.k * z.k;
    if (!(n > 0)) throw std::runtime_error("renormalize_ads: left the timelike cone");
    return z * (1.0 / std::sqrt(n));
}

// u x v at a base point z of H^3_1, defined by <u x v, w> = det(z, u, v, w)
// for all tangent w. Note j x k = -i at base 1: the determinant convention
// fixes the signs, and the Weingarten identity N_u = f_u x N depends on them.
SplitQuat cross(const AdSPoint& base, const SplitQuat& u, const SplitQuat& v,
                double tol = 1e-9);

// Cross product in the pure-imaginary 3-space span{i,j,k} with metric (-,+,+),
// normalized so that cross3(k, i) = j.
inline SplitQuat cross3(const SplitQuat& p, const SplitQuat& q) {
    return {0,
            -(p.j * q.k - p.k * q.j),
            p.k * q.i - p.i * q.k,
            p.i * q.j - p.j * q.i};
}

// Fiber exponential e^{t rho} for a pure imaginary axis with <rho,rho> in {-1,0,1}.
SplitQuat exp_fiber(const SplitQuat& rho, double t, double tol = 1e-9);

}  // namespace adsflat
