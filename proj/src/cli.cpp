#include "adsflat/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "adsflat/gallery.hpp"
#include "adsflat/hopf.hpp"
#include "adsflat/lift.hpp"
#include "adsflat/report.hpp"

namespace adsflat {

namespace {

constexpr double kPi = 3.14159265358979323846;

using nlohmann::json;

double det4(const SplitQuat r[4]) {
    double m[4][4] = {{r[0].re, r[0].i, r[0].j, r[0].k},
                      {r[1].re, r[1].i, r[1].j, r[1].k},
                      {r[2].re, r[2].i, r[2].j, r[2].k},
                      {r[3].re, r[3].i, r[3].j, r[3].k}};
    double det = 1;
    for (int c = 0; c < 4; ++c) {
        int p = c;
        for (int q = c + 1; q < 4; ++q)
            if (std::fabs(m[q][c]) > std::fabs(m[p][c])) p = q;
        if (p != c) {
            for (int q = 0; q < 4; ++q) std::swap(m[p][q], m[c][q]);
            det = -det;
        }
        if (m[c][c] == 0) return 0;
        det *= m[c][c];
        for (int q = c + 1; q < 4; ++q) {
            double f = m[q][c] / m[c][c];
            for (int w = c; w < 4; ++w) m[q][w] -= f * m[c][w];
        }
    }
    return det;
}

std::vector<CheckResult> algebra_suite() {
    std::mt19937_64 rng(0x5eed0001u);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    auto rnd = [&] { return SplitQuat{U(rng), U(rng), U(rng), U(rng)}; };
    auto rnd_unit = [&] {
        return renormalize_ads({1.5 + 0.5 * std::fabs(U(rng)), U(rng), U(rng), U(rng)});
    };

    double r_assoc = 0, r_conj = 0, r_norm = 0, r_iso = 0, r_cross = 0;
    // multiplication table, frozen determinant-consistent convention
    double r_table = 0;
    auto cell = [&](SplitQuat got, SplitQuat want) {
        r_table = std::max(r_table, (got - want).enorm());
    };
    SplitQuat I = SplitQuat::I(), J = SplitQuat::J(), K = SplitQuat::K();
    cell(I * I, -SplitQuat::one());
    cell(J * J, SplitQuat::one());
    cell(K * K, SplitQuat::one());
    cell(I * J, K);
    cell(J * I, -K);
    cell(J * K, -I);
    cell(K * J, I);
    cell(K * I, J);
    cell(I * K, -J);

    for (int t = 0; t < 10000; ++t) {
        SplitQuat z1 = rnd(), z2 = rnd(), z3 = rnd();
        r_assoc = std::max(r_assoc, ((z1 * z2) * z3 - z1 * (z2 * z3)).enorm());
        r_conj = std::max(r_conj, (conj(z1 * z2) - conj(z2) * conj(z1)).enorm());
        r_norm = std::max(
            r_norm, (z1 * conj(z1) - SplitQuat::one() * (-inner(z1, z1))).enorm());
        SplitQuat w = rnd_unit();
        r_iso = std::max(r_iso, std::fabs(inner(z1 * w, z2 * w) - inner(z1, z2)));
        r_iso = std::max(r_iso, std::fabs(inner(w * z1, w * z2) - inner(z1, z2)));

        AdSPoint base(rnd_unit());
        auto tangent = [&](SplitQuat x) { return x + base.q * inner(x, base.q); };
        SplitQuat u = tangent(rnd()), v = tangent(rnd()), ww = tangent(rnd());
        SplitQuat c = cross(base, u, v, 1e-6);
        SplitQuat rows[4] = {base.q, u, v, ww};
        r_cross = std::max(r_cross, std::fabs(inner(c, ww) - det4(rows)));
        r_cross = std::max(r_cross, std::fabs(inner(c, u)));
        r_cross = std::max(r_cross, std::fabs(inner(c, v)));
    }
    return {{"algebra_mult_table", r_table, 1e-15, r_table <= 1e-15},
            {"algebra_associativity", r_assoc, 1e-10, r_assoc <= 1e-10},
            {"algebra_conj_antihom", r_conj, 1e-10, r_conj <= 1e-10},
            {"algebra_norm_identity", r_norm, 1e-10, r_norm <= 1e-10},
            {"algebra_translation_isometry", r_iso, 1e-10, r_iso <= 1e-10},
            {"algebra_cross_det", r_cross, 1e-10, r_cross <= 1e-10}};
}

std::vector<CheckResult> hopf_suite() {
    std::mt19937_64 rng(0x5eed0002u);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    auto rnd_unit = [&] {
        return renormalize_ads({1.5 + 0.5 * std::fabs(U(rng)), U(rng), U(rng), U(rng)});
    };
    std::vector<HopfAxis> axes = {HopfAxis({0, 1, 0, 0}), HopfAxis({0, 1, 0, 1}),
                                  HopfAxis({0, 0.3, 0.4, 1.2})};

    double r_norm = 0, r_fiber = 0, r_cover = 0, r_leg = 0, r_group = 0;
    for (int t = 0; t < 1000; ++t) {
        AdSPoint z(rnd_unit());
        const HopfAxis& ax = axes[t % axes.size()];
        SplitQuat h = hopf_map(ax, z);
        r_norm = std::max(r_norm,
                          std::fabs(inner(h, h) - inner(ax.rho, ax.rho)));
        double s = 2 * U(rng);
        AdSPoint zf = fiber(ax, z, s);
        r_fiber = std::max(r_fiber, (hopf_map(ax, zf) - h).enorm());
        r_group = std::max(
            r_group, (exp_fiber(ax.rho, s + 0.7) -
                      exp_fiber(ax.rho, s) * exp_fiber(ax.rho, 0.7)).enorm());

        LegendrianPoint p = double_cover(z);
        LegendrianPoint pm = double_cover(AdSPoint(-z.q));
        r_cover = std::max(r_cover, (p.gamma - pm.gamma).enorm());
        r_cover = std::max(r_cover, (p.nu - pm.nu).enorm());
        r_leg = std::max(r_leg, std::fabs(inner(p.gamma, p.gamma) + 1));
        r_leg = std::max(r_leg, std::fabs(inner(p.nu, p.nu) - 1));
        r_leg = std::max(r_leg, std::fabs(inner(p.gamma, p.nu)));
    }
    return {{"hopf_image_norm", r_norm, 1e-10, r_norm <= 1e-10},
            {"hopf_fiber_invariance", r_fiber, 1e-10, r_fiber <= 1e-10},
            {"hopf_exp_group", r_group, 1e-10, r_group <= 1e-10},
            {"hopf_cover_even", r_cover, 0.0, r_cover == 0.0},
            {"hopf_cover_legendrian", r_leg, 1e-10, r_leg <= 1e-10}};
}

std::vector<CheckResult> causal_suite() {
    std::mt19937_64 rng(0x5eed0003u);
    std::uniform_real_distribution<double> U(0.01, kPi - 0.01);
    double r_sign = 0;
    for (int t = 0; t < 10000; ++t) {
        double w = U(rng);
        double cot = std::cos(w) / std::sin(w);
        SplitQuat p{0, std::cos(w), 0, std::sin(w)};
        if (std::fabs(std::fabs(cot) - 1) <= 1e-9) {
            if (causal_character(p, 1e-8) != CausalClass::lightlike) r_sign = 1;
            continue;
        }
        double lhs = -std::cos(2 * w);
        double rhs = (1 - cot * cot) / (1 + cot * cot);
        if (lhs * rhs <= 0) r_sign = 1;
        CausalClass want = lhs < 0 ? CausalClass::timelike : CausalClass::spacelike;
        if (causal_character(p) != want) r_sign = 1;
    }
    return {{"causal_dictionary", r_sign, 0.5, r_sign < 0.5}};
}

FrontCurve front_from_spec(const json& spec);

FrontCurve preset_front(const std::string& name) {
    auto circle = [](double k) {
        double w = std::atan(1.0 / k);
        if (w <= 0) w += kPi;
        double c2 = std::cos(2 * w);
        if (!(c2 > 0))
            throw std::invalid_argument("preset circle needs |k| > 1, got " +
                                        std::to_string(k));
        return make_front_from_curvature([w](double) { return w; }, 0,
                                         kPi / std::sqrt(c2), true);
    };
    if (name == "circle-k2") return circle(2.0);
    if (name == "circle-k3") return circle(3.0);
    if (name == "circle-k1.4") return circle(1.4);
    if (name == "geodesic")
        return make_front_from_curvature([](double) { return kPi / 2; }, -3, 3, false);
    if (name == "horocycle")
        return make_front_from_curvature([](double) { return kPi / 4; }, -3, 3, false);
    if (name == "wavy")
        return make_front_from_curvature(
            [](double s) { return 1.0 + 0.2 * std::sin(s); }, -2, 2, false);
    if (name == "wavy2")
        return make_front_from_curvature(
            [](double s) { return 2.0 + 0.2 * std::sin(1.3 * s); }, -2, 2, false);
    throw std::invalid_argument(
        "unknown preset '" + name +
        "'; known: circle-k2 circle-k3 circle-k1.4 geodesic horocycle wavy wavy2");
}

FrontCurve constant_curvature_front(const json& spec) {
    double w;
    if (spec.contains("omega")) {
        w = spec.at("omega").get<double>();
    } else if (spec.contains("k")) {
        w = std::atan(1.0 / spec.at("k").get<double>());
        if (w <= 0) w += kPi;
    } else {
        throw std::invalid_argument("constant-curvature: need field 'omega' or 'k'");
    }
    if (!(w > 0 && w < kPi))
        throw std::invalid_argument("constant-curvature: omega must lie in (0, pi)");
    double h = spec.value("step", 1e-3);
    double c2 = std::cos(2 * w);
    bool closed = spec.value("closed", c2 > 1e-9);
    if (closed) {
        if (!(c2 > 1e-9))
            throw std::invalid_argument(
                "constant-curvature: closed requires |k| > 1 (cos 2 omega > 0)");
        return make_front_from_curvature([w](double) { return w; }, 0,
                                         kPi / std::sqrt(c2), true, h);
    }
    double smin = -3, smax = 3;
    if (spec.contains("range")) {
        smin = spec.at("range").at(0).get<double>();
        smax = spec.at("range").at(1).get<double>();
    }
    return make_front_from_curvature([w](double) { return w; }, smin, smax, false, h);
}

FrontCurve angle_samples_front(const json& spec) {
    Sampled1D w;
    w.s0 = spec.value("s0", 0.0);
    w.h = spec.value("h", 1e-2);
    w.closed = spec.value("closed", false);
    w.v = spec.at("omega").get<std::vector<double>>();
    if (w.v.size() < 5) throw std::invalid_argument("angle-samples: need >= 5 samples");
    if (!(w.h > 0)) throw std::invalid_argument("angle-samples: h must be > 0");
    double h = spec.value("step", 1e-3);
    if (w.closed)
        return make_front_from_curvature([&w](double s) { return w.at(s); }, 0,
                                         w.period(), true, h);
    if (w.s0 > 0 || w.s_end() < 0)
        throw std::invalid_argument("angle-samples: open sample range must contain 0");
    return make_front_from_curvature([&w](double s) { return w.at(s); }, w.s0,
                                     w.s_end(), false, h);
}

FrontCurve front_from_spec(const json& spec) {
    int schema = spec.value("schema", 1);
    if (schema != 1)
        throw std::invalid_argument("unsupported curve spec schema " +
                                    std::to_string(schema));
    std::string kind = spec.at("kind").get<std::string>();
    if (kind == "constant-curvature") return constant_curvature_front(spec);
    if (kind == "angle-samples") return angle_samples_front(spec);
    if (kind == "preset") return preset_front(spec.at("name").get<std::string>());
    if (kind == "parallel-of") {
        FrontCurve base = front_from_spec(spec.at("base"));
        return parallel_front(base, spec.at("d").get<double>());
    }
    throw std::invalid_argument(
        "unknown curve kind '" + kind +
        "'; known: constant-curvature angle-samples parallel-of preset");
}

void parse_axis(const std::string& text, double out[3]) {
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &out[0], &out[1], &out[2]) != 3)
        throw std::invalid_argument("grid spec '" + text +
                                    "' is not of the form min:max:step");
}

bool wants(const RunConfig& cfg, const char* fmt) {
    for (const auto& f : cfg.formats)
        if (f == fmt) return true;
    return false;
}

void apply_tol_overrides(std::vector<CheckResult>& checks,
                         const std::map<std::string, double>& tol) {
    for (auto& [name, value] : tol) {
        if (!(value > 0))
            throw std::invalid_argument("tolerance '" + name + "' must be > 0");
        bool found = false;
        for (auto& c : checks) {
            if (c.name != name) continue;
            c.tolerance = value;
            c.pass = c.max_residual <= value;
            found = true;
        }
        if (!found)
            throw std::invalid_argument("tolerance override names unknown check '" +
                                        name + "'");
    }
}

int finish(const RunConfig& cfg, std::vector<CheckResult> checks,
           const std::map<std::string, double>& details) {
    apply_tol_overrides(checks, cfg.tol);
    for (const auto& c : checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                  << " residual=" << c.max_residual << " tol=" << c.tolerance << "\n";
    if (wants(cfg, "report"))
        write_report_json(checks, details, cfg.out_dir + "/report.json");
    return all_pass(checks) ? 0 : 1;
}

void export_lift_csv(const AsymptoticCurve& c, const std::string& path) {
    std::ostringstream out;
    out << "u,a0,a1,a2,a3,omega\n";
    for (std::size_t m = 0; m < c.a.v.size(); ++m) {
        double u = c.a.s0 + c.a.h * static_cast<double>(m);
        const SplitQuat& a = c.a.v[m];
        out << format17(u) << ',' << format17(a.re) << ',' << format17(a.i) << ','
            << format17(a.j) << ',' << format17(a.k) << ','
            << format17(c.omega.v[m]) << '\n';
    }
    write_file_atomic(path, out.str());
}

GridSpec default_grid(const AsymptoticCurve& c1, const AsymptoticCurve& c2) {
    GridSpec g;
    g.u0 = c1.front_closed ? 0.0 : std::max(c1.u0(), -2.0);
    g.u1 = c1.front_closed ? c1.front_period : std::min(c1.u_end(), 2.0);
    g.v0 = c2.front_closed ? 0.0 : std::max(c2.u0(), -2.0);
    g.v1 = c2.front_closed ? c2.front_period : std::min(c2.u_end(), 2.0);
    g.hu = (g.u1 - g.u0) / 100;
    g.hv = (g.v1 - g.v0) / 100;
    return g;
}

int run_lift(const RunConfig& cfg) {
    FrontCurve front = front_from_spec_file(cfg.front1);
    if (!front.has_omega()) front = prepare_front(front);
    AsymptoticCurve c = asymptotic_lift(front, cfg.sign);

    double r_param = 0, r_proj = 0, r_mani = 0;
    for (std::size_t m = 2; m + 2 < c.a.v.size(); ++m) {
        double u = c.a.s0 + c.a.h * static_cast<double>(m);
        SplitQuat a = c.a.v[m];
        SplitQuat p = conj(a) * c.a.deriv_at(u);
        double w = c.omega.v[m];
        r_param = std::max(
            r_param, (p - SplitQuat{0, std::cos(w), 0, std::sin(w)}).enorm());
        r_mani = std::max(r_mani, std::fabs(inner(a, a) + 1));
        LegendrianPoint pr = double_cover(AdSPoint(a));
        r_proj = std::max(r_proj, (pr.gamma - front.gamma.at(u)).enorm());
        r_proj = std::max(r_proj, (pr.nu - front.nu.at(u)).enorm());
    }
    std::vector<CheckResult> checks = {
        {"asymptotic_parametrization", r_param, 1e-7, r_param <= 1e-7},
        {"projection", r_proj, 1e-6, r_proj <= 1e-6},
        {"on_manifold", r_mani, 1e-8, r_mani <= 1e-8}};
    if (wants(cfg, "csv")) export_lift_csv(c, cfg.out_dir + "/lift.csv");
    std::map<std::string, double> details = {
        {"u_min", c.u0()}, {"u_max", c.u_end()}, {"eps", c.eps}};
    return finish(cfg, std::move(checks), details);
}

struct PipelineOut {
    FlatSurfacePatch patch;
    AdmissiblePair pair;
};

PipelineOut build_patch(const RunConfig& cfg) {
    if (cfg.front1.empty() || cfg.front2.empty())
        throw std::invalid_argument("surface/torus/export need --front1 and --front2");
    FrontCurve f1 = front_from_spec_file(cfg.front1);
    FrontCurve f2 = front_from_spec_file(cfg.front2);
    PipelineOut out;
    out.pair = check_admissible(f1, f2);
    AsymptoticCurve l1 = asymptotic_lift(out.pair.g1, cfg.sign);
    AsymptoticCurve l2 = asymptotic_lift(out.pair.g2, cfg.sign);
    GridSpec grid;
    if (cfg.grid_u.empty()) {
        grid = default_grid(l1, l2);
    } else {
        double gu[3], gv[3];
        parse_axis(cfg.grid_u, gu);
        parse_axis(cfg.grid_v.empty() ? cfg.grid_u : cfg.grid_v, gv);
        grid.u0 = gu[0];
        grid.u1 = gu[1];
        grid.hu = gu[2];
        grid.v0 = gv[0];
        grid.v1 = gv[1];
        grid.hv = gv[2];
        if (!(grid.hu > 0 && grid.hv > 0 && grid.u1 > grid.u0 && grid.v1 > grid.v0))
            throw std::invalid_argument("grid ranges must be non-degenerate, step > 0");
    }
    out.patch = synthesize(l1, l2, grid);
    return out;
}

void export_patch(const RunConfig& cfg, const FlatSurfacePatch& patch) {
    if (wants(cfg, "csv")) export_csv(patch, cfg.out_dir + "/surface.csv");
    if (wants(cfg, "obj")) export_obj(patch, cfg.out_dir + "/surface.obj");
}

int run_surface(const RunConfig& cfg, bool torus) {
    PipelineOut p = build_patch(cfg);
    std::vector<CheckResult> checks = verify_patch(p.patch);
    std::map<std::string, double> details = {
        {"admissibility_margin", p.pair.margin},
        {"roles_swapped", p.pair.swapped ? 1.0 : 0.0}};
    if (torus) {
        if (!p.pair.g1.closed() || !p.pair.g2.closed())
            throw std::invalid_argument("torus: both fronts must be closed");
        TorusRecord tor = torus_check(p.patch);
        checks.push_back({"torus_closure1", tor.closure1.residual, 1e-6,
                          tor.closure1.closed});
        checks.push_back({"torus_closure2", tor.closure2.residual, 1e-6,
                          tor.closure2.closed});
        checks.push_back({"torus", tor.torus ? 0.0 : 1.0, 0.5, tor.torus});
        checks.push_back({"beta_identity", tor.beta_identity_residual, 1e-5,
                          tor.beta_identity_residual <= 1e-5});
        details["eps1"] = tor.closure1.eps;
        details["eps2"] = tor.closure2.eps;
        details["beta1_min_speed"] = tor.beta1_min_speed;
        details["beta2_min_speed"] = tor.beta2_min_speed;
    }
    export_patch(cfg, p.patch);
    return finish(cfg, std::move(checks), details);
}

int run_scenario_cmd(const RunConfig& cfg) {
    if (cfg.scenario_name.empty())
        throw std::invalid_argument("scenario: --name is required");
    ScenarioResult r = run_scenario(cfg.scenario_name, cfg.scenario_params);
    export_patch(cfg, r.patch);
    return finish(cfg, std::move(r.checks), r.details);
}

int run_selftest(const RunConfig& cfg) {
    std::vector<CheckResult> checks = algebra_suite();
    auto h = hopf_suite();
    auto c = causal_suite();
    checks.insert(checks.end(), h.begin(), h.end());
    checks.insert(checks.end(), c.begin(), c.end());
    return finish(cfg, std::move(checks), {});
}

int run_export(const RunConfig& cfg) {
    PipelineOut p = build_patch(cfg);
    export_patch(cfg, p.patch);
    if (wants(cfg, "report"))
        write_report_json({}, {{"admissibility_margin", p.pair.margin}},
                          cfg.out_dir + "/report.json");
    return 0;
}

}  // namespace

FrontCurve front_from_spec_json_text(const std::string& text) {
    return front_from_spec(json::parse(text));
}

FrontCurve front_from_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read curve spec '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return front_from_spec_json_text(buf.str());
}

GridSpec parse_grid(const std::string& grid_u, const std::string& grid_v) {
    double gu[3], gv[3];
    parse_axis(grid_u, gu);
    parse_axis(grid_v.empty() ? grid_u : grid_v, gv);
    GridSpec g;
    g.u0 = gu[0];
    g.u1 = gu[1];
    g.hu = gu[2];
    g.v0 = gv[0];
    g.v1 = gv[1];
    g.hv = gv[2];
    if (!(g.hu > 0 && g.hv > 0 && g.u1 > g.u0 && g.v1 > g.v0))
        throw std::invalid_argument("grid ranges must be non-degenerate, step > 0");
    return g;
}

int run(const RunConfig& config) {
    try {
        if (config.command == "selftest") return run_selftest(config);
        if (config.command == "lift") {
            if (config.front1.empty())
                throw std::invalid_argument("lift: --front1 is required");
            return run_lift(config);
        }
        if (config.command == "surface") return run_surface(config, false);
        if (config.command == "torus") return run_surface(config, true);
        if (config.command == "scenario") return run_scenario_cmd(config);
        if (config.command == "export") return run_export(config);
        throw std::invalid_argument("unknown command '" + config.command + "'");
    } catch (const AdmissibilityError& e) {
        std::cerr << "FAIL admissible: " << e.what() << "\n";
        if (wants(config, "report")) {
            write_report_json({{"admissible", 1.0, 0.5, false}}, {},
                              config.out_dir + "/report.json");
        }
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int main_cli(int argc, char** argv) {
    CLI::App app{"flat Lorentzian surfaces in anti-de Sitter 3-space"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> tol_kv, param_kv, grids;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--format", cfg.formats, "artifacts: csv obj report");
        sub->add_option("--tol", tol_kv, "tolerance override name=value");
    };

    CLI::App* selftest = app.add_subcommand("selftest", "algebra and fibration suites");
    add_common(selftest);

    CLI::App* lift = app.add_subcommand("lift", "asymptotic lift of one front");
    lift->add_option("--front1", cfg.front1, "curve spec JSON")->required();
    lift->add_option("--sign", cfg.sign, "initial value sign, +1 or -1");
    add_common(lift);

    CLI::App* surface = app.add_subcommand("surface", "synthesize and verify a patch");
    CLI::App* torus = app.add_subcommand("torus", "closed-front pipeline with torus checks");
    CLI::App* exp = app.add_subcommand("export", "synthesize and export without checks");
    for (CLI::App* sub : {surface, torus, exp}) {
        sub->add_option("--front1", cfg.front1, "curve spec JSON")->required();
        sub->add_option("--front2", cfg.front2, "curve spec JSON")->required();
        sub->add_option("--grid", grids, "min:max:step, once for both axes or u then v")
            ->expected(-1);
        add_common(sub);
    }

    CLI::App* scen = app.add_subcommand("scenario", "run a named gallery scenario");
    scen->add_option("--name", cfg.scenario_name, "scenario name")->required();
    scen->add_option("--param", param_kv, "scenario parameter name=value");
    double T = 0, c0 = 0;
    auto* optT = scen->add_option("--T", T, "dn-q2 horizon");
    auto* optc0 = scen->add_option("--c0", c0, "dn-q2 constant");
    add_common(scen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto split_kv = [](const std::string& s, std::map<std::string, double>& out) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("expected name=value, got '" + s + "'");
        out[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
    };
    try {
        for (const auto& s : tol_kv) split_kv(s, cfg.tol);
        for (const auto& s : param_kv) split_kv(s, cfg.scenario_params);
        if (*optT) cfg.scenario_params["T"] = T;
        if (*optc0) cfg.scenario_params["c0"] = c0;
        if (!grids.empty()) cfg.grid_u = grids[0];
        if (grids.size() > 1) cfg.grid_v = grids[1];
        if (grids.size() > 2) throw std::invalid_argument("--grid given more than twice");
        if (cfg.sign != 1 && cfg.sign != -1)
            throw std::invalid_argument("--sign must be +1 or -1");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    for (CLI::App* sub : {selftest, lift, surface, torus, scen, exp})
        if (sub->parsed()) cfg.command = sub->get_name();
    return run(cfg);
}

}  // namespace adsflat
