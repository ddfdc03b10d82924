#include "adsflat/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "adsflat/numutil.hpp"

namespace adsflat {

namespace {

constexpr double kPi = 3.14159265358979323846;

// RK4 for b' = b p(s) from b(0) = 1, spliced over [smin, 0] and [0, smax].
AmbientCurve integrate_ambient(const std::function<SplitQuat(double)>& p_fn,
                               double smin, double smax, double h) {
    if (smin > 0 || smax < 0)
        throw std::invalid_argument("integrate_ambient: domain must contain 0");
    auto step = [&](const SplitQuat& b, double s, double hs) {
        SplitQuat k1 = b * p_fn(s);
        SplitQuat k2 = (b + k1 * (hs / 2)) * p_fn(s + hs / 2);
        SplitQuat k3 = (b + k2 * (hs / 2)) * p_fn(s + hs / 2);
        SplitQuat k4 = (b + k3 * hs) * p_fn(s + hs);
        return renormalize_ads(b + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (hs / 6));
    };
    long n_neg = std::lround(-smin / h);
    long n_pos = std::lround(smax / h);
    std::vector<SplitQuat> fwd(n_pos + 1), bwd(n_neg + 1);
    fwd[0] = bwd[0] = SplitQuat::one();
    for (long m = 0; m < n_pos; ++m) fwd[m + 1] = step(fwd[m], h * m, h);
    for (long m = 0; m < n_neg; ++m) bwd[m + 1] = step(bwd[m], -h * m, -h);
    AmbientCurve out;
    out.c.s0 = -h * static_cast<double>(n_neg);
    out.c.h = h;
    out.c.v.reserve(n_neg + n_pos + 1);
    for (long m = n_neg; m >= 1; --m) out.c.v.push_back(bwd[m]);
    for (auto& z : fwd) out.c.v.push_back(z);
    return out;
}

GridSpec grid_for(const AsymptoticCurve& c1, const AsymptoticCurve& c2, int steps,
                  double cap) {
    GridSpec g;
    g.u0 = c1.front_closed ? 0.0 : std::max(c1.u0(), -cap);
    g.u1 = c1.front_closed ? c1.front_period : std::min(c1.u_end(), cap);
    g.v0 = c2.front_closed ? 0.0 : std::max(c2.u0(), -cap);
    g.v1 = c2.front_closed ? c2.front_period : std::min(c2.u_end(), cap);
    g.hu = (g.u1 - g.u0) / steps;
    g.hv = (g.v1 - g.v0) / steps;
    return g;
}

double max_speed_inner(const AsymptoticCurve& c) {
    double worst = -1e300;
    for (std::size_t m = 2; m + 2 < c.a.v.size(); ++m) {
        double u = c.a.s0 + c.a.h * static_cast<double>(m);
        SplitQuat d = c.a.deriv_at(u);
        worst = std::max(worst, inner(d, d));
    }
    return worst;
}

double min_speed_inner(const AsymptoticCurve& c) {
    double worst = 1e300;
    for (std::size_t m = 2; m + 2 < c.a.v.size(); ++m) {
        double u = c.a.s0 + c.a.h * static_cast<double>(m);
        SplitQuat d = c.a.deriv_at(u);
        worst = std::min(worst, inner(d, d));
    }
    return worst;
}

double min_sine(const FlatSurfacePatch& p) {
    double worst = 1e300;
    for (int iu = 0; iu <= p.grid.nu(); ++iu)
        for (int iv = 0; iv <= p.grid.nv(); ++iv)
            worst = std::min(worst, std::sin(p.omega1[iu] + p.omega2[iv]));
    return worst;
}

Sampled1D axis_omega(const std::vector<double>& vals, double s0, double h) {
    Sampled1D o;
    o.s0 = s0;
    o.h = h;
    o.v = vals;
    return o;
}

void append_completeness(std::vector<CheckResult>& checks,
                         std::map<std::string, double>& details,
                         const FlatSurfacePatch& p, CompletenessVerdict expect) {
    CompletenessCertificate cert = completeness_check(
        axis_omega(p.omega1, p.grid.u0, p.grid.hu),
        axis_omega(p.omega2, p.grid.v0, p.grid.hv));
    details["completeness_margin"] = cert.margin;
    checks.push_back({"completeness_verdict",
                      cert.verdict == expect ? 0.0 : 1.0, 0.5,
                      cert.verdict == expect});
}

struct CylinderBuild {
    FlatSurfacePatch patch;
    AdmissiblePair pair;
    HopfAxis axis;
    double omega0 = 0;      // constant angle of the fiber front, pi if point
    bool point_fiber = false;
};

CylinderBuild build_hopf_cylinder(const HopfAxis& axis, const FrontCurve& sigma) {
    const SplitQuat& rho = axis.rho;
    if (std::fabs(rho.re) > 1e-12 || std::fabs(rho.j) > 1e-12)
        throw std::invalid_argument(
            "hopf_cylinder: axis must lie in span{i,k} (conjugate a general axis "
            "into that plane first)");

    CylinderBuild b{FlatSurfacePatch{}, AdmissiblePair{}, axis, 0, false};
    FrontCurve fiber;
    if (std::fabs(rho.k) < 1e-12) {
        // axis parallel to i: the fiber projects to a point front
        b.omega0 = kPi;
        b.point_fiber = true;
        fiber = make_front_from_curvature([](double) { return kPi; }, 0, kPi, true);
    } else {
        double w0 = std::atan2(rho.k, rho.i);
        if (w0 <= 0) w0 += kPi;  // -rho spans the same fibers
        b.omega0 = w0;
        double c2 = std::cos(2 * w0);
        if (c2 > 1e-9) {
            double L = kPi / std::sqrt(c2);
            fiber = make_front_from_curvature([w0](double) { return w0; }, 0, L, true);
        } else {
            fiber = make_front_from_curvature([w0](double) { return w0; }, -4, 4, false);
        }
    }

    b.pair = check_admissible(sigma, fiber);
    AsymptoticCurve l1 = asymptotic_lift(b.pair.g1);
    AsymptoticCurve l2 = asymptotic_lift(b.pair.g2);
    b.patch = synthesize(l1, l2, grid_for(l1, l2, 96, 4.0));
    return b;
}

// Spread of h_rho along the family that should consist of fibers. When the
// fiber front landed in slot 1 the cylinder is the conjugated product, so the
// scan runs over conj(f) instead.
double fiber_invariance_residual(const CylinderBuild& b) {
    const FlatSurfacePatch& p = b.patch;
    const SplitQuat& rho = b.axis.rho;
    int su = std::max(1, p.grid.nu() / 24), sv = std::max(1, p.grid.nv() / 24);
    double worst = 0;
    auto h_rho = [&](SplitQuat z) { return z * rho * conj(z); };
    if (!b.pair.swapped) {
        for (int iu = 0; iu <= p.grid.nu(); iu += su) {
            SplitQuat base = h_rho(p.f_node(iu, 0));
            for (int iv = 0; iv <= p.grid.nv(); iv += sv)
                worst = std::max(worst, (h_rho(p.f_node(iu, iv)) - base).enorm());
        }
    } else {
        for (int iv = 0; iv <= p.grid.nv(); iv += sv) {
            SplitQuat base = h_rho(conj(p.f_node(0, iv)));
            for (int iu = 0; iu <= p.grid.nu(); iu += su)
                worst = std::max(worst, (h_rho(conj(p.f_node(iu, iv))) - base).enorm());
        }
    }
    return worst;
}

}  // namespace

FlatSurfacePatch hopf_cylinder(const HopfAxis& axis, const FrontCurve& sigma) {
    return build_hopf_cylinder(axis, sigma).patch;
}

ScenarioResult hopf_cylinder_scenario(const HopfAxis& axis, const FrontCurve& sigma) {
    CylinderBuild b = build_hopf_cylinder(axis, sigma);
    ScenarioResult r;
    r.name = "hopf-cylinder";
    r.patch = b.patch;
    r.checks = verify_patch(b.patch);

    double inv = fiber_invariance_residual(b);
    r.checks.push_back({"fiber_invariance", inv, 1e-6, inv <= 1e-6});

    const std::vector<double>& fiber_w =
        b.pair.swapped ? b.patch.omega1 : b.patch.omega2;
    double spread = *std::max_element(fiber_w.begin(), fiber_w.end()) -
                    *std::min_element(fiber_w.begin(), fiber_w.end());
    r.checks.push_back({"fiber_front_constant_omega", spread, 1e-7, spread <= 1e-7});

    // dictionary: |k| > 1 / = 1 / < 1 for timelike / lightlike / spacelike axis
    double c2 = std::cos(2 * b.omega0);
    double dict_res;
    bool dict_ok;
    if (axis.norm_class == 0) {
        dict_res = std::fabs(c2);
        dict_ok = dict_res <= 1e-9;
    } else {
        dict_res = static_cast<double>(axis.norm_class) * c2;  // want < 0
        dict_ok = dict_res < 0;
    }
    r.checks.push_back({"curvature_dictionary", dict_res,
                        axis.norm_class == 0 ? 1e-9 : 0.0, dict_ok});

    r.details["fiber_omega0"] = b.omega0;
    r.details["axis_norm_class"] = axis.norm_class;
    r.details["admissibility_margin"] = b.pair.margin;
    r.details["roles_swapped"] = b.pair.swapped ? 1.0 : 0.0;
    r.details["point_fiber"] = b.point_fiber ? 1.0 : 0.0;
    return r;
}

ScenarioResult dn_q4_counterexample() {
    // circles of curvature k1 = 3 and k2 = 1.4: both asymptotic lifts timelike
    FrontCurve f1 = make_front_from_curvature(
        [](double) { return std::atan(1.0 / 3.0); }, 0,
        kPi / std::sqrt(0.8), true);
    FrontCurve f2 = make_front_from_curvature(
        [](double) { return std::atan(1.0 / 1.4); }, 0,
        kPi / std::sqrt(0.32432432432432434), true);
    AdmissiblePair pair = check_admissible(f1, f2);
    AsymptoticCurve l1 = asymptotic_lift(pair.g1);
    AsymptoticCurve l2 = asymptotic_lift(pair.g2);

    ScenarioResult r;
    r.name = "dn-q4";
    r.patch = synthesize(l1, l2, grid_for(l1, l2, 120, 8.0));
    r.checks = verify_patch(r.patch);

    double q1 = max_speed_inner(l1), q2 = max_speed_inner(l2);
    r.checks.push_back({"lift1_timelike", q1, -0.5, q1 <= -0.5});
    r.checks.push_back({"lift2_timelike", q2, -0.1, q2 <= -0.1});

    double ms = min_sine(r.patch);
    r.checks.push_back({"sine_lower_bound", ms, 0.05, ms >= 0.05});

    append_completeness(r.checks, r.details, r.patch,
                        CompletenessVerdict::certified);

    TorusRecord tor = torus_check(r.patch);
    r.checks.push_back({"torus_closure1", tor.closure1.residual, 1e-6,
                        tor.closure1.closed});
    r.checks.push_back({"torus_closure2", tor.closure2.residual, 1e-6,
                        tor.closure2.closed});
    r.checks.push_back({"torus", tor.torus ? 0.0 : 1.0, 0.5, tor.torus});
    r.details["eps1"] = tor.closure1.eps;
    r.details["eps2"] = tor.closure2.eps;
    r.details["beta_identity_residual"] = tor.beta_identity_residual;

    // control: the geodesic (k = 0) second curve has a spacelike lift, so the
    // both-timelike configuration genuinely needs |k| > 1 on both circles
    FrontCurve geo = make_front_from_curvature([](double) { return kPi / 2; }, -1, 1,
                                               false);
    AsymptoticCurve lg = asymptotic_lift(check_admissible(f1, geo).g2);
    r.details["control_geodesic_speed"] = min_speed_inner(lg);
    return r;
}

ScenarioResult dn_q2_counterexample(double c0, double T) {
    if (!(c0 > 0 && c0 < 1) || !(T > 100))
        throw std::invalid_argument("dn_q2_counterexample: need 0 < c0 < 1, T > 100");
    auto w1 = [c0](double u) { return 0.5 * std::acos(c0 / (1 + u * u)); };
    // 2(1 - sin 2 omega1) = 2x^2/(1 + sqrt(1-x^2)) with x = c0/(1+t^2);
    // the naive form cancels catastrophically for large t
    auto diag = [&](double t) {
        double x = c0 / (1 + t * t);
        return x * std::sqrt(2.0 / (1 + std::sqrt((1 - x) * (1 + x))));
    };
    auto axis = [&](double u) { return std::sqrt(c0 / (1 + u * u)); };

    ScenarioResult r;
    r.name = "dn-q2";

    double Lfull = adaptive_simpson(diag, 0, T);
    double Lpart = adaptive_simpson(diag, 0, T / 10);
    double Afull = adaptive_simpson(axis, 0, T);
    double Apart = adaptive_simpson(axis, 0, T / 10);
    r.details["diag_length"] = Lfull;
    r.details["diag_length_decade_before"] = Lpart;
    r.details["axis_length"] = Afull;
    r.details["axis_growth"] = Afull - Apart;
    r.checks.push_back({"diag_length_converges", Lfull - Lpart, 1e-2,
                        Lfull - Lpart <= 1e-2});
    r.checks.push_back({"axis_length_diverges", Afull - Apart, 1.1,
                        Afull - Apart >= 1.1});

    // direct completeness scan on the unbounded chart data
    Sampled1D o1, o2;
    o1.s0 = o2.s0 = 0;
    o1.h = o2.h = T / 20000;
    o1.v.resize(20001);
    o2.v.resize(20001);
    for (std::size_t m = 0; m < o1.v.size(); ++m) {
        o1.v[m] = w1(o1.h * static_cast<double>(m));
        o2.v[m] = kPi / 2 + o1.v[m];
    }
    CompletenessCertificate cert = completeness_check(o1, o2);
    r.details["witness_length"] = cert.witness_length;
    r.details["witness_tail"] = cert.witness_tail;
    r.checks.push_back({"suspected_incomplete", cert.witness_tail, 1e-3,
                        cert.verdict == CompletenessVerdict::suspected_incomplete});

    // finite window of the immersion itself
    FrontCurve f1 = make_front_from_curvature(w1, -2, 6, false);
    FrontCurve f2 = make_front_from_curvature(
        [&](double v) { return kPi / 2 - w1(v); }, -2, 6, false);
    AdmissiblePair pair = check_admissible(f1, f2);
    AsymptoticCurve l1 = asymptotic_lift(pair.g1);
    AsymptoticCurve l2 = asymptotic_lift(pair.g2);
    GridSpec grid;
    grid.u0 = 0;
    grid.u1 = 2;
    grid.v0 = 0;
    grid.v1 = 2;
    grid.hu = grid.hv = 0.02;
    r.patch = synthesize(l1, l2, grid);
    auto patch_checks = verify_patch(r.patch);
    r.checks.insert(r.checks.end(), patch_checks.begin(), patch_checks.end());

    // asymptotic parameter dominates Sasaki arc length: |u(s)| >= |s|
    AmbientCurve b = integrate_ambient(
        [](double s) { return SplitQuat{0, std::cosh(s), 0, std::sinh(s)}; }, -3, 3,
        1e-3);
    ReparametrizedCurve rep = asymptotic_reparametrize(b);
    double dom = 1e300;
    for (std::size_t m = 0; m < rep.u_of_s.v.size(); ++m) {
        double s = rep.u_of_s.s0 + rep.u_of_s.h * static_cast<double>(m);
        dom = std::min(dom, std::fabs(rep.u_of_s.v[m]) - std::fabs(s));
    }
    r.details["u_dominates_margin"] = dom;
    r.checks.push_back({"asymptotic_parameter_dominates", -dom, 1e-9, dom >= -1e-9});
    return r;
}

ScenarioResult dn_q1_demo(const AmbientCurve& b1, const AmbientCurve& b2) {
    ReparametrizedCurve r1 = asymptotic_reparametrize(b1);
    ReparametrizedCurve r2 = asymptotic_reparametrize(b2);

    double q1 = inner(b1.c.deriv_at(0), b1.c.deriv_at(0));
    double q2 = inner(b2.c.deriv_at(0), b2.c.deriv_at(0));
    bool swapped = false;
    if (q1 > 0 && q2 < 0) {
        std::swap(r1, r2);
        swapped = true;
    } else if (!(q1 < 0 && q2 > 0)) {
        throw std::invalid_argument(
            "dn_q1_demo: need one timelike and one spacelike curve");
    }

    ScenarioResult r;
    r.name = "dn-q1";
    AsymptoticCurve l1 = r1.curve, l2 = r2.curve;
    r.patch = synthesize(l1, l2, grid_for(l1, l2, 100, 1e300));
    r.checks = verify_patch(r.patch);

    double s1 = max_speed_inner(l1), s2 = min_speed_inner(l2);
    r.checks.push_back({"lift1_timelike", s1, -0.1, s1 <= -0.1});
    r.checks.push_back({"lift2_spacelike", -s2, -0.1, s2 >= 0.1});
    double ms = min_sine(r.patch);
    r.checks.push_back({"no_singular_points", -ms, -1e-6, ms > 1e-6});
    r.details["min_sine"] = ms;
    r.details["roles_swapped"] = swapped ? 1.0 : 0.0;
    return r;
}

ScenarioResult dn_q1_demo_default() {
    AmbientCurve b1 = integrate_ambient(
        [](double s) {
            double t = 0.4 * std::sin(s);
            return SplitQuat{0, std::cosh(t), 0, std::sinh(t)};
        },
        -3, 3, 1e-3);
    AmbientCurve b2 = integrate_ambient(
        [](double s) {
            double t = 0.3 * std::sin(1.3 * s);
            return SplitQuat{0, std::sinh(t), 0, std::cosh(t)};
        },
        -3, 3, 1e-3);
    return dn_q1_demo(b1, b2);
}

std::vector<std::string> scenario_names() {
    return {"hopf-cylinder", "hopf-torus", "dn-q4", "dn-q2", "dn-q1"};
}

ScenarioResult run_scenario(const std::string& name,
                            const std::map<std::string, double>& params) {
    auto get = [&](const char* key, double fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    if (name == "hopf-cylinder") {
        int cls = static_cast<int>(get("axis_class", -1));
        double boost = get("axis_boost", 0.4);
        SplitQuat rho;
        if (cls == -1)
            rho = {0, std::cosh(boost), 0, std::sinh(boost)};
        else if (cls == 0)
            rho = {0, 1, 0, 1};
        else if (cls == 1)
            rho = {0, std::sinh(0.5), 0, std::cosh(0.5)};
        else
            throw std::invalid_argument("run_scenario: axis_class must be -1, 0 or 1");
        FrontCurve sigma = make_front_from_curvature(
            [](double s) { return 0.28 + 0.05 * std::sin(s); }, -2.5, 2.5, false);
        ScenarioResult r = hopf_cylinder_scenario(HopfAxis(rho), sigma);
        r.name = name;
        return r;
    }
    if (name == "hopf-torus") {
        double boost = get("axis_boost", 0.4);
        SplitQuat rho{0, std::cosh(boost), 0, std::sinh(boost)};
        double k = get("sigma_k", 3.0);
        if (!(std::fabs(k) > 1))
            throw std::invalid_argument("run_scenario: hopf-torus needs |sigma_k| > 1");
        double w = std::atan(1.0 / k);
        if (w <= 0) w += kPi;
        FrontCurve sigma = make_front_from_curvature(
            [w](double) { return w; }, 0, kPi / std::sqrt(std::cos(2 * w)), true);
        ScenarioResult r = hopf_cylinder_scenario(HopfAxis(rho), sigma);
        r.name = name;
        TorusRecord tor = torus_check(r.patch);
        r.checks.push_back({"torus_closure1", tor.closure1.residual, 1e-6,
                            tor.closure1.closed});
        r.checks.push_back({"torus_closure2", tor.closure2.residual, 1e-6,
                            tor.closure2.closed});
        r.checks.push_back({"torus", tor.torus ? 0.0 : 1.0, 0.5, tor.torus});
        r.details["eps1"] = tor.closure1.eps;
        r.details["eps2"] = tor.closure2.eps;
        r.details["beta_identity_residual"] = tor.beta_identity_residual;
        return r;
    }
    if (name == "dn-q4") return dn_q4_counterexample();
    if (name == "dn-q2") return dn_q2_counterexample(get("c0", 0.99), get("T", 1e4));
    if (name == "dn-q1") return dn_q1_demo_default();
    std::ostringstream msg;
    msg << "run_scenario: unknown scenario '" << name << "'; known:";
    for (const auto& s : scenario_names()) msg << " " << s;
    throw std::invalid_argument(msg.str());
}

}  // namespace adsflat
