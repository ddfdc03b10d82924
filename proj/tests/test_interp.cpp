#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adsflat/interp.hpp"

using namespace adsflat;

namespace {

constexpr double kTau = 6.283185307179586476925;

Sampled1D sample(double (*f)(double), double s0, double s1, std::size_t n, bool closed) {
    Sampled1D out;
    out.s0 = s0;
    out.h = (s1 - s0) / static_cast<double>(n);
    out.closed = closed;
    out.v.resize(n + 1);
    for (std::size_t m = 0; m <= n; ++m) out.v[m] = f(s0 + out.h * static_cast<double>(m));
    return out;
}

}  // namespace

TEST_CASE("closed interpolation of sin") {
    Sampled1D s = sample(std::sin, 0, kTau, 400, true);
    double r_at = 0, r_d1 = 0, r_d2 = 0;
    for (double x = -5; x < 15; x += 0.0173) {
        r_at = std::max(r_at, std::fabs(s.at(x) - std::sin(x)));
        r_d1 = std::max(r_d1, std::fabs(s.deriv_at(x) - std::cos(x)));
        r_d2 = std::max(r_d2, std::fabs(s.deriv2_at(x) + std::sin(x)));
    }
    CHECK(r_at <= 1e-7);
    CHECK(r_d1 <= 1e-7);
    CHECK(r_d2 <= 1e-4);
    CHECK(s.min() == doctest::Approx(-1.0).epsilon(1e-4));
    CHECK(s.max() == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("open interpolation with one-sided edges") {
    Sampled1D s = sample(std::exp, -1, 2, 600, false);
    double r_at = 0, r_d1 = 0;
    for (double x = -1; x <= 2.0000001; x += 0.0041) {
        r_at = std::max(r_at, std::fabs(s.at(x) - std::exp(x)));
        r_d1 = std::max(r_d1, std::fabs(s.deriv_at(x) - std::exp(x)));
    }
    CHECK(r_at <= 1e-7);
    CHECK(r_d1 <= 1e-4);
    // endpoint evaluation is exact on nodes
    CHECK(s.at(-1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(s.at(2) == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(s.at(2.5), std::out_of_range);
    CHECK_THROWS_AS(s.at(-1.5), std::out_of_range);
}

TEST_CASE("cumulative integral") {
    Sampled1D s = sample(std::cos, 0, 3, 3000, false);
    Sampled1D F = s.cumulative();
    double worst = 0;
    for (double x = 0; x <= 3.0000001; x += 0.013)
        worst = std::max(worst, std::fabs(F.at(x) - std::sin(x)));
    CHECK(worst <= 1e-10);
}

TEST_CASE("monotone inverse") {
    auto g = [](double x) { return x + 0.3 * std::sin(x); };
    Sampled1D s;
    s.s0 = 0;
    s.h = 1e-3;
    s.v.resize(5001);
    for (std::size_t m = 0; m <= 5000; ++m) s.v[m] = g(s.h * static_cast<double>(m));
    double worst = 0;
    for (double x = 0.01; x < 5; x += 0.037)
        worst = std::max(worst, std::fabs(s.inverse_at(g(x)) - x));
    CHECK(worst <= 1e-9);
    // clamped outside the sampled range
    CHECK(s.inverse_at(-10.0) == doctest::Approx(0.0));
    CHECK(s.inverse_at(1e6) == doctest::Approx(5.0));
}

TEST_CASE("quat curve interpolation") {
    SampledQuat c;
    c.s0 = -2;
    c.h = 5e-3;
    c.v.resize(801);
    for (std::size_t m = 0; m <= 800; ++m) {
        double t = c.s0 + c.h * static_cast<double>(m);
        c.v[m] = {std::cos(t), std::sin(t), std::cosh(0.3 * t), std::sinh(0.3 * t)};
    }
    double r_at = 0, r_d1 = 0;
    for (double t = -2; t <= 2.0000001; t += 0.0097) {
        SplitQuat want{std::cos(t), std::sin(t), std::cosh(0.3 * t), std::sinh(0.3 * t)};
        SplitQuat dwant{-std::sin(t), std::cos(t), 0.3 * std::sinh(0.3 * t),
                        0.3 * std::cosh(0.3 * t)};
        r_at = std::max(r_at, (c.at(t) - want).enorm());
        r_d1 = std::max(r_d1, (c.deriv_at(t) - dwant).enorm());
    }
    CHECK(r_at <= 1e-8);
    CHECK(r_d1 <= 1e-5);
}
