#include "adsflat/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adsflat {

namespace {

// Sample access with ghost values: periodic wrap for closed curves, quadratic
// extrapolation past the ends for open ones.
template <typename T>
T sample(const std::vector<T>& v, long idx, bool closed) {
    long n = static_cast<long>(v.size()) - 1;
    if (closed) {
        long m = idx % n;
        if (m < 0) m += n;
        return v[m];
    }
    if (idx >= 0 && idx <= n) return v[idx];
    if (idx < 0) {
        double t = static_cast<double>(idx);  // quadratic through v0,v1,v2 at t
        return v[0] * ((t - 1) * (t - 2) / 2.0) - v[1] * (t * (t - 2)) +
               v[2] * (t * (t - 1) / 2.0);
    }
    double t = static_cast<double>(idx - n);
    return v[n] * ((t + 1) * (t + 2) / 2.0) - v[n - 1] * (t * (t + 2)) +
           v[n - 2] * (t * (t + 1) / 2.0);
}

template <typename T>
double locate(double s0, double h, bool closed, const std::vector<T>& v, double s,
              long& m) {
    long n = static_cast<long>(v.size()) - 1;
    if (n < 1) throw std::runtime_error("interp: need at least 2 samples");
    double x = (s - s0) / h;
    if (closed) {
        x = std::fmod(x, static_cast<double>(n));
        if (x < 0) x += n;
    } else if (x < -2.5 || x > n + 2.5) {
        throw std::out_of_range("interp: parameter " + std::to_string(s) +
                                " outside sampled domain");
    }
    m = std::clamp(static_cast<long>(std::floor(x)), 0L, n - 1);
    return x - m;
}

template <typename T>
T value_at(double s0, double h, bool closed, const std::vector<T>& v, double s) {
    long m;
    double t = locate(s0, h, closed, v, s, m);
    T p0 = sample(v, m - 1, closed), p1 = sample(v, m, closed);
    T p2 = sample(v, m + 1, closed), p3 = sample(v, m + 2, closed);
    return (p1 * 2.0 + (p2 - p0) * t + (p0 * 2.0 - p1 * 5.0 + p2 * 4.0 - p3) * (t * t) +
            (p1 * 3.0 - p0 - p2 * 3.0 + p3) * (t * t * t)) *
           0.5;
}

template <typename T>
T deriv_at_impl(double s0, double h, bool closed, const std::vector<T>& v, double s) {
    auto f = [&](double x) { return value_at(s0, h, closed, v, x); };
    long n = static_cast<long>(v.size()) - 1;
    double x = (s - s0) / h;
    if (closed || (x >= 2 && x <= n - 2))
        return (f(s - 2 * h) - f(s - h) * 8.0 + f(s + h) * 8.0 - f(s + 2 * h)) *
               (1.0 / (12 * h));
    if (x < 2)
        return (f(s) * -25.0 + f(s + h) * 48.0 - f(s + 2 * h) * 36.0 +
                f(s + 3 * h) * 16.0 - f(s + 4 * h) * 3.0) *
               (1.0 / (12 * h));
    return (f(s) * 25.0 - f(s - h) * 48.0 + f(s - 2 * h) * 36.0 - f(s - 3 * h) * 16.0 +
            f(s - 4 * h) * 3.0) *
           (1.0 / (12 * h));
}

template <typename T>
T deriv2_at_impl(double s0, double h, bool closed, const std::vector<T>& v, double s) {
    auto f = [&](double x) { return value_at(s0, h, closed, v, x); };
    long n = static_cast<long>(v.size()) - 1;
    double x = (s - s0) / h;
    if (closed || (x >= 2 && x <= n - 2))
        return (f(s - 2 * h) * -1.0 + f(s - h) * 16.0 - f(s) * 30.0 + f(s + h) * 16.0 -
                f(s + 2 * h)) *
               (1.0 / (12 * h * h));
    if (x < 2)
        return (f(s) * 2.0 - f(s + h) * 5.0 + f(s + 2 * h) * 4.0 - f(s + 3 * h)) *
               (1.0 / (h * h));
    return (f(s) * 2.0 - f(s - h) * 5.0 + f(s - 2 * h) * 4.0 - f(s - 3 * h)) *
           (1.0 / (h * h));
}

}  // namespace

double Sampled1D::at(double s) const { return value_at(s0, h, closed, v, s); }
double Sampled1D::deriv_at(double s) const { return deriv_at_impl(s0, h, closed, v, s); }
double Sampled1D::deriv2_at(double s) const { return deriv2_at_impl(s0, h, closed, v, s); }

double Sampled1D::min() const { return *std::min_element(v.begin(), v.end()); }
double Sampled1D::max() const { return *std::max_element(v.begin(), v.end()); }

Sampled1D Sampled1D::cumulative() const {
    Sampled1D out;
    out.s0 = s0;
    out.h = h;
    out.closed = false;  // an antiderivative is generally not periodic
    out.v.resize(v.size());
    out.v[0] = 0;
    long nn = static_cast<long>(n());
    for (long m = 0; m < nn; ++m) {
        double inc = (-sample(v, m - 1, closed) + 13.0 * sample(v, m, closed) +
                      13.0 * sample(v, m + 1, closed) - sample(v, m + 2, closed)) *
                     (h / 24.0);
        out.v[m + 1] = out.v[m] + inc;
    }
    return out;
}

double Sampled1D::inverse_at(double y) const {
    if (y <= v.front()) return s0;
    if (y >= v.back()) return s_end();
    std::size_t lo = 0, hi = v.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        (v[mid] <= y ? lo : hi) = mid;
    }
    double a = s0 + h * static_cast<double>(lo);
    double b = a + h;
    for (int it = 0; it < 80; ++it) {
        double m = 0.5 * (a + b);
        (at(m) <= y ? a : b) = m;
    }
    return 0.5 * (a + b);
}

SplitQuat SampledQuat::at(double s) const { return value_at(s0, h, closed, v, s); }
SplitQuat SampledQuat::deriv_at(double s) const {
    return deriv_at_impl(s0, h, closed, v, s);
}
SplitQuat SampledQuat::deriv2_at(double s) const {
    return deriv2_at_impl(s0, h, closed, v, s);
}

}  // namespace adsflat
