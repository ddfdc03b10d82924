#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "adsflat/front.hpp"
#include "adsflat/lift.hpp"
#include "adsflat/surface.hpp"

using namespace adsflat;

namespace {

constexpr double kPi = 3.14159265358979323846;

AsymptoticCurve lift_of(const std::function<double(double)>& w, double s0, double s1,
                        bool closed = false) {
    return asymptotic_lift(prepare_front(make_front_from_curvature(w, s0, s1, closed)));
}

FlatSurfacePatch wavy_patch(double hu = 0.05) {
    AsymptoticCurve a1 = lift_of([](double s) { return 1.0 + 0.2 * std::sin(s); },
                                 -2.5, 2.5);
    AsymptoticCurve a2 = lift_of([](double s) { return 2.0 + 0.2 * std::sin(1.3 * s); },
                                 -2.5, 2.5);
    GridSpec grid;
    grid.u0 = grid.v0 = -1.5;
    grid.u1 = grid.v1 = 1.5;
    grid.hu = grid.hv = hu;
    return synthesize(a1, a2, grid);
}

AsymptoticCurve circle_lift(double k) {
    double w = std::atan(1.0 / k);
    return lift_of([w](double) { return w; }, 0, kPi / std::sqrt(std::cos(2 * w)), true);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("closed fundamental forms") {
    FormsSample s = closed_forms(0.3, 0.5);
    CHECK(s.E == doctest::Approx(-std::cos(0.6)).epsilon(1e-15));
    CHECK(s.F == doctest::Approx(-std::cos(-0.2)).epsilon(1e-15));
    CHECK(s.G == doctest::Approx(-std::cos(1.0)).epsilon(1e-15));
    CHECK(s.e == 0);
    CHECK(s.g == 0);
    CHECK(s.f2 == doctest::Approx(std::sin(0.8)).epsilon(1e-15));
    // Lorentzian metric: EG - F^2 = -sin^2(omega1 + omega2) = -f2^2
    CHECK(s.E * s.G - s.F * s.F == doctest::Approx(-s.f2 * s.f2).epsilon(1e-12));
}

TEST_CASE("synthesized patch passes the full residual scan") {
    FlatSurfacePatch patch = wavy_patch();
    CHECK((patch.f_node(30, 30) - SplitQuat::one()).enorm() <= 1e-12);
    CHECK((patch.N_node(30, 30) - SplitQuat::J()).enorm() <= 1e-12);
    auto checks = verify_patch(patch);
    for (const auto& c : checks) {
        INFO(c.name, " residual ", c.max_residual, " tol ", c.tolerance);
        CHECK(c.pass);
    }
}

TEST_CASE("serial and parallel synthesis agree bitwise") {
    AsymptoticCurve a1 = lift_of([](double s) { return 1.0 + 0.2 * std::sin(s); },
                                 -1.5, 1.5);
    AsymptoticCurve a2 = lift_of([](double s) { return 2.0 + 0.1 * std::cos(s); },
                                 -1.5, 1.5);
    GridSpec grid;
    grid.u0 = grid.v0 = -1;
    grid.u1 = grid.v1 = 1;
    grid.hu = grid.hv = 0.04;
    FlatSurfacePatch p = synthesize(a1, a2, grid);
    FlatSurfacePatch q = synthesize_serial(a1, a2, grid);
    REQUIRE(p.f.size() == q.f.size());
    for (std::size_t m = 0; m < p.f.size(); ++m) {
        CHECK((p.f[m] - q.f[m]).enorm() == 0);
        CHECK((p.N[m] - q.N[m]).enorm() == 0);
    }
}

TEST_CASE("round trip through extract_asymptotic_curves") {
    FlatSurfacePatch patch = wavy_patch();
    auto [b1, b2] = extract_asymptotic_curves(patch);
    FlatSurfacePatch redo = synthesize(b1, b2, patch.grid);
    double worst = 0;
    for (std::size_t m = 0; m < patch.f.size(); ++m)
        worst = std::max(worst, (patch.f[m] - redo.f[m]).enorm());
    CHECK(worst <= 1e-6);
}

TEST_CASE("off-grid evaluation matches nodes") {
    FlatSurfacePatch patch = wavy_patch();
    double worst = 0;
    for (int iu = 0; iu <= patch.grid.nu(); iu += 7)
        for (int iv = 0; iv <= patch.grid.nv(); iv += 7) {
            worst = std::max(worst, (patch.f_at(patch.grid.u(iu), patch.grid.v(iv)) -
                                     patch.f_node(iu, iv)).enorm());
            worst = std::max(worst, (patch.N_at(patch.grid.u(iu), patch.grid.v(iv)) -
                                     patch.N_node(iu, iv)).enorm());
        }
    CHECK(worst <= 1e-9);
}

TEST_CASE("coordinate chart for constant angles") {
    Sampled1D w1, w2;
    w1.s0 = w2.s0 = -1;
    w1.h = w2.h = 1e-2;
    w1.v.assign(201, 0.3);
    w2.v.assign(201, 0.5);
    CoordinateChart chart = coordinate_chart(w1, w2);
    for (double u = -0.9; u < 0.9; u += 0.13)
        for (double v = -0.9; v < 0.9; v += 0.17) {
            CHECK(chart.x(u, v) ==
                  doctest::Approx(std::cos(0.3) * u + std::cos(0.5) * v).epsilon(1e-9));
            CHECK(chart.y(u, v) ==
                  doctest::Approx(std::sin(0.3) * u - std::sin(0.5) * v).epsilon(1e-9));
        }
}

TEST_CASE("completeness certificate for a bounded angle sum") {
    Sampled1D w1, w2;
    w1.s0 = w2.s0 = 0;
    w1.h = w2.h = 1e-2;
    w1.v.resize(501);
    w2.v.resize(501);
    for (std::size_t m = 0; m <= 500; ++m) {
        double s = 1e-2 * static_cast<double>(m);
        w1.v[m] = 1.0 + 0.2 * std::sin(s);
        w2.v[m] = 1.1 + 0.2 * std::cos(s);
    }
    CompletenessCertificate cert = completeness_check(w1, w2);
    CHECK(cert.verdict == CompletenessVerdict::certified);
    CHECK(cert.c1 >= 1.5);
    CHECK(cert.c2 <= 2.6);
    CHECK(cert.margin > 0.5);
}

TEST_CASE("torus check on the (3, 1.4) circle pair") {
    FlatSurfacePatch patch;
    {
        AsymptoticCurve a1 = circle_lift(3.0);
        AsymptoticCurve a2 = circle_lift(1.4);
        GridSpec grid;
        grid.u0 = grid.v0 = 0;
        grid.u1 = a1.front_period;
        grid.v1 = a2.front_period;
        grid.hu = grid.u1 / 80;
        grid.hv = grid.v1 / 80;
        patch = synthesize(a1, a2, grid);
    }
    TorusRecord rec = torus_check(patch);
    CHECK(rec.torus);
    CHECK(rec.closure1.closed);
    CHECK(rec.closure2.closed);
    CHECK(rec.closure1.eps == -1);
    CHECK(rec.closure2.eps == -1);
    CHECK(rec.beta1_closure <= 1e-6);
    CHECK(rec.beta2_closure <= 1e-6);
    CHECK(rec.beta1_min_speed > 0.1);
    CHECK(rec.beta2_min_speed > 0.1);
    CHECK(rec.beta_identity_residual <= 1e-8);
}

TEST_CASE("csv export is deterministic with the documented header") {
    FlatSurfacePatch patch = wavy_patch(0.15);
    export_csv(patch, "/tmp/adsflat_t1.csv");
    export_csv(patch, "/tmp/adsflat_t2.csv");
    std::string a = slurp("/tmp/adsflat_t1.csv");
    CHECK(a == slurp("/tmp/adsflat_t2.csv"));
    CHECK(a.substr(0, a.find('\n')) == "u,v,x0,x1,x2,x3,N0,N1,N2,N3,omega1,omega2");
    std::remove("/tmp/adsflat_t1.csv");
    std::remove("/tmp/adsflat_t2.csv");
}

TEST_CASE("obj export writes the full vertex grid") {
    FlatSurfacePatch patch = wavy_patch(0.15);
    export_obj(patch, "/tmp/adsflat_t.obj");
    std::string text = slurp("/tmp/adsflat_t.obj");
    std::size_t nverts = 0, nfaces = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) == 0) ++nverts;
        if (line.rfind("f ", 0) == 0) ++nfaces;
    }
    std::size_t n = static_cast<std::size_t>(patch.grid.nu() + 1);
    CHECK(nverts == n * n);
    // two triangles per grid cell
    CHECK(nfaces == 2 * static_cast<std::size_t>(patch.grid.nu()) * patch.grid.nv());
    std::remove("/tmp/adsflat_t.obj");
}

TEST_CASE("synthesize rejects a sine violation") {
    AsymptoticCurve a1 = lift_of([](double) { return 2.0; }, -1, 1);
    AsymptoticCurve a2 = lift_of([](double) { return 0.8; }, -1, 1);
    GridSpec grid;
    grid.u0 = grid.v0 = -0.5;
    grid.u1 = grid.v1 = 0.5;
    grid.hu = grid.hv = 0.05;
    CHECK_THROWS(synthesize(a1, a2, grid));
}
