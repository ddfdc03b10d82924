#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adsflat/front.hpp"

using namespace adsflat;

namespace {

constexpr double kPi = 3.14159265358979323846;

FrontCurve circle(double k) {
    double w = std::atan(1.0 / k);
    if (w <= 0) w += kPi;
    return make_front_from_curvature([w](double) { return w; }, 0,
                                     kPi / std::sqrt(std::cos(2 * w)), true);
}

}  // namespace

TEST_CASE("circle front of curvature 2") {
    FrontCurve c = circle(2.0);
    CHECK(c.closed());
    CHECK(c.period() == doctest::Approx(kPi / std::sqrt(0.6)).epsilon(1e-12));
    CHECK(c.has_omega());
    validate_front(c);

    // frozen: cot^-1(2) = 0.4636476090008061
    for (double s = 0; s < c.period(); s += 0.31) {
        CHECK(std::fabs(c.omega.at(s) - 0.4636476090008061) <= 1e-9);
        CurvatureValue kv = geodesic_curvature(c, s);
        CHECK(kv.finite);
        CHECK(kv.k == doctest::Approx(2.0).epsilon(1e-9));
    }
    // closes over the period
    CHECK((c.gamma.at(c.period()) - c.gamma.at(0.0)).enorm() <= 1e-6);

    FrontCurve p = prepare_front(c);
    CHECK((p.gamma.at(0.0) - SplitQuat::I()).enorm() <= 1e-7);
    CHECK((p.nu.at(0.0) - SplitQuat::K()).enorm() <= 1e-7);
}

TEST_CASE("sasaki speed and curvature agreement invariants") {
    FrontCurve f = prepare_front(make_front_from_curvature(
        [](double s) { return 1.0 + 0.2 * std::sin(s); }, -2, 2, false));
    double r_speed = 0, r_cot = 0, r_leg = 0;
    for (double s = f.s0() + 0.05; s < f.s_end() - 0.05; s += 0.003) {
        SplitQuat gp = f.gamma.deriv_at(s), np = f.nu.deriv_at(s);
        r_speed = std::max(r_speed,
                           std::fabs(inner(gp, gp) + inner(np, np) - 4));
        r_leg = std::max(r_leg, std::fabs(inner(f.gamma.at(s), f.nu.at(s))));
        r_leg = std::max(r_leg, std::fabs(inner(gp, f.nu.at(s))));
        double w = f.omega.at(s);
        r_cot = std::max(r_cot,
                         std::fabs(geodesic_curvature(f, s).k -
                                   std::cos(w) / std::sin(w)));
        CHECK(w > 0);
        CHECK(w < kPi);
    }
    CHECK(r_speed <= 1e-6);
    CHECK(r_leg <= 1e-8);
    CHECK(r_cot <= 1e-4);
}

TEST_CASE("positive_normal restores the regular orientation") {
    FrontCurve f = prepare_front(circle(2.0));
    FrontCurve flipped = f;
    for (auto& z : flipped.nu.v) z = -z;
    flipped.omega.v.clear();
    FrontCurve fixed = positive_normal(flipped);
    // sin(omega) > 0 again: the curvature sine component is positive
    CurvatureValue kv = geodesic_curvature(fixed, 0.5);
    CHECK(kv.sinw > 0);
    // idempotent on an already positive front
    FrontCurve again = positive_normal(f);
    CHECK((again.nu.at(0.3) - f.nu.at(0.3)).enorm() <= 1e-12);
}

TEST_CASE("parallel front") {
    FrontCurve base = prepare_front(circle(2.0));
    FrontCurve same = parallel_front(base, 0.0);
    CHECK((same.gamma.at(1.0) - base.gamma.at(1.0)).enorm() <= 1e-14);
    CHECK_FALSE(same.has_omega());

    FrontCurve moved = parallel_front(base, 0.3);
    validate_front(moved);
    // circle of curvature 2 moved towards the center: curvature shifts per
    // k_d = (k cosh d - sinh d) / (cosh d - k sinh d)
    double ch = std::cosh(0.3), sh = std::sinh(0.3);
    double want = (2 * ch - sh) / (ch - 2 * sh);
    FrontCurve prepped = prepare_front(moved);
    CHECK(geodesic_curvature(prepped, 0.4).k == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("cusped parallel front: singular branch and admissibility") {
    FrontCurve base = make_front_from_curvature(
        [](double s) { return 0.5 + 0.15 * std::sin(s); }, -2, 2, false);
    // cusps where tan(omega) = tanh(d)
    FrontCurve par = parallel_front(base, std::atanh(0.5));
    FrontCurve p = prepare_front(par);

    double min_speed = 1e300;
    for (double s = p.s0() + 0.02; s < p.s_end() - 0.02; s += 1e-3) {
        SplitQuat gp = p.gamma.deriv_at(s);
        min_speed = std::min(min_speed, std::sqrt(std::fabs(inner(gp, gp))));
    }
    CHECK(min_speed <= 1e-2);  // passes near a cusp

    // singular branch: range crosses pi with width < pi
    CHECK(p.omega.min() < kPi);
    CHECK(p.omega.max() > kPi);
    CHECK(p.omega.max() - p.omega.min() < kPi);

    AdmissiblePair pair = check_admissible(circle(3.0), par);
    CHECK_FALSE(pair.swapped);
    CHECK(pair.flipped2);
    CHECK(pair.margin >= 0.1);
}

TEST_CASE("admissibility rejections and role swap") {
    FrontCurve k3 = circle(3.0);
    CHECK_THROWS_AS(check_admissible(k3, circle(3.0)), AdmissibilityError);

    // reversed input order is repaired by swapping roles
    AdmissiblePair pair = check_admissible(circle(1.4), k3);
    CHECK(pair.swapped);
    CHECK(pair.margin >= 1.5);  // curvature-unit margin 3 - 1.4 = 1.6
}

TEST_CASE("construction failure modes") {
    // closed front over a wrong period
    CHECK_THROWS_AS(make_front_from_curvature([](double) { return std::atan(0.5); },
                                              0, 3.0, true),
                    std::runtime_error);
    // angle range sweeping past a full cot branch
    FrontCurve wide = make_front_from_curvature([](double s) { return 0.3 + s; },
                                                -1, 3, false);
    CHECK_THROWS(prepare_front(wide));
}

TEST_CASE("point front") {
    FrontCurve pt = make_front_from_curvature([](double) { return kPi; }, 0, kPi, true);
    CHECK(pt.closed());
    double max_speed = 0;
    for (double s = 0; s < pt.period(); s += 0.01) {
        SplitQuat gp = pt.gamma.deriv_at(s);
        max_speed = std::max(max_speed, gp.enorm());
        CHECK((pt.gamma.at(s) - SplitQuat::I()).enorm() <= 1e-8);
    }
    CHECK(max_speed <= 1e-8);
    FrontCurve p = prepare_front(pt);
    CHECK(std::fabs(p.omega.at(1.0) - kPi) <= 1e-9);
}

TEST_CASE("geodesic front has zero curvature") {
    FrontCurve g = make_front_from_curvature([](double) { return kPi / 2; }, -2, 2,
                                             false);
    for (double s = -1.8; s < 1.8; s += 0.21)
        CHECK(std::fabs(geodesic_curvature(g, s).k) <= 1e-10);
}
