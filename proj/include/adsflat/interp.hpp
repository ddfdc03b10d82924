#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "adsflat/splitquat.hpp"

namespace adsflat {

// Uniformly sampled scalar function on [s0, s0 + n h] (n+1 samples) with cubic
// Catmull-Rom interpolation. Closed samples wrap with the stored period n h.
struct Sampled1D {
    double s0 = 0.0;
    double h = 1e-3;
    bool closed = false;
    std::vector<double> v;

    std::size_t n() const { return v.empty() ? 0 : v.size() - 1; }
    double period() const { return h * static_cast<double>(n()); }
    double s_end() const { return s0 + period(); }

    double at(double s) const;
    double deriv_at(double s) const;   // 5-point 4th-order stencil
    double deriv2_at(double s) const;  // 5-point 4th-order stencil

    double min() const;
    double max() const;

    // Antiderivative samples with F(s0) = 0, 4th-order per-interval rule.
    Sampled1D cumulative() const;

    // Inverse evaluation for monotone increasing samples (clamped at the ends).
    double inverse_at(double y) const;
};

// Same layout for SplitQuat-valued curves; interpolation is componentwise.
struct SampledQuat {
    double s0 = 0.0;
    double h = 1e-3;
    bool closed = false;
    std::vector<SplitQuat> v;

    std::size_t n() const { return v.empty() ? 0 : v.size() - 1; }
    double period() const { return h * static_cast<double>(n()); }
    double s_end() const { return s0 + period(); }

    SplitQuat at(double s) const;
    SplitQuat deriv_at(double s) const;
    SplitQuat deriv2_at(double s) const;
};

}  // namespace adsflat
