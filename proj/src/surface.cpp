#include "adsflat/surface.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adsflat {

namespace {

constexpr double kPi = 3.14159265358979323846;

AsymptoticCurve left_normalize(const AsymptoticCurve& a) {
    SplitQuat a0 = a.at(0.0);
    if ((a0 - SplitQuat::one()).enorm() <= 1e-13) return a;
    AsymptoticCurve out = a;
    SplitQuat q = conj(renormalize_ads(a0));
    for (auto& z : out.a.v) z = q * z;
    return out;
}

FlatSurfacePatch synth_impl(const AsymptoticCurve& a1_in, const AsymptoticCurve& a2_in,
                            const GridSpec& grid, bool parallel) {
    if (!(grid.hu > 0) || !(grid.hv > 0) || grid.u1 <= grid.u0 || grid.v1 <= grid.v0)
        throw std::invalid_argument("synthesize: degenerate grid");
    FlatSurfacePatch p;
    p.a1 = left_normalize(a1_in);
    p.a2 = left_normalize(a2_in);
    p.grid = grid;

    const int nu = grid.nu(), nv = grid.nv();
    p.omega1.resize(nu + 1);
    p.omega2.resize(nv + 1);
    for (int iu = 0; iu <= nu; ++iu) p.omega1[iu] = p.a1.omega_at(grid.u(iu));
    for (int iv = 0; iv <= nv; ++iv) p.omega2[iv] = kPi - p.a2.omega_at(grid.v(iv));

    std::ostringstream bad;
    int bad_count = 0;
    for (int iu = 0; iu <= nu && bad_count < 5; ++iu)
        for (int iv = 0; iv <= nv && bad_count < 5; ++iv)
            if (!(std::sin(p.omega1[iu] + p.omega2[iv]) > 0)) {
                bad << " (" << grid.u(iu) << ", " << grid.v(iv) << ")";
                ++bad_count;
            }
    if (bad_count > 0)
        throw std::invalid_argument(
            "synthesize: sin(omega1 + omega2) <= 0 at nodes" + bad.str());

    std::vector<SplitQuat> B(nv + 1), JB(nv + 1);
    for (int iv = 0; iv <= nv; ++iv) {
        B[iv] = conj(p.a2.at(grid.v(iv)));
        JB[iv] = SplitQuat::J() * B[iv];
    }
    p.f.resize((nu + 1) * (nv + 1));
    p.N.resize((nu + 1) * (nv + 1));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int iu = 0; iu <= nu; ++iu) {
        SplitQuat A = p.a1.at(grid.u(iu));
        for (int iv = 0; iv <= nv; ++iv) {
            p.f[iu * (nv + 1) + iv] = A * B[iv];
            p.N[iu * (nv + 1) + iv] = A * JB[iv];
        }
    }
    return p;
}

}  // namespace

SplitQuat FlatSurfacePatch::f_at(double u, double v) const {
    return a1.at(u) * conj(a2.at(v));
}

SplitQuat FlatSurfacePatch::N_at(double u, double v) const {
    return a1.at(u) * SplitQuat::J() * conj(a2.at(v));
}

FlatSurfacePatch synthesize(const AsymptoticCurve& a1, const AsymptoticCurve& a2,
                            const GridSpec& grid) {
    return synth_impl(a1, a2, grid, true);
}

FlatSurfacePatch synthesize_serial(const AsymptoticCurve& a1, const AsymptoticCurve& a2,
                                   const GridSpec& grid) {
    return synth_impl(a1, a2, grid, false);
}

std::pair<AsymptoticCurve, AsymptoticCurve> extract_asymptotic_curves(
    const FlatSurfacePatch& patch) {
    const GridSpec& g = patch.grid;
    int iv0 = static_cast<int>(std::lround(-g.v0 / g.hv));
    int iu0 = static_cast<int>(std::lround(-g.u0 / g.hu));
    if (std::fabs(g.v0 + iv0 * g.hv) > 1e-9 || std::fabs(g.u0 + iu0 * g.hu) > 1e-9)
        throw std::invalid_argument("extract_asymptotic_curves: grid must contain (0,0)");

    AsymptoticCurve b1, b2;
    b1.a.s0 = g.u0;
    b1.a.h = g.hu;
    b1.a.v.reserve(g.nu() + 1);
    for (int iu = 0; iu <= g.nu(); ++iu) b1.a.v.push_back(patch.f_node(iu, iv0));
    b2.a.s0 = g.v0;
    b2.a.h = g.hv;
    b2.a.v.reserve(g.nv() + 1);
    for (int iv = 0; iv <= g.nv(); ++iv) b2.a.v.push_back(conj(patch.f_node(iu0, iv)));
    b1.omega = angle_of(b1);
    b2.omega = angle_of(b2);
    return {b1, b2};
}

FormsSample closed_forms(double omega1, double omega2) {
    FormsSample s;
    s.E = -std::cos(2 * omega1);
    s.F = -std::cos(omega1 - omega2);
    s.G = -std::cos(2 * omega2);
    s.e = 0;
    s.f2 = std::sin(omega1 + omega2);
    s.g = 0;
    s.l = std::cos(2 * omega1);
    s.m = -std::cos(omega1 - omega2);
    s.n = std::cos(2 * omega2);
    return s;
}

FormsSample measured_forms(const FlatSurfacePatch& patch, double u, double v, double h) {
    SplitQuat fu = (patch.f_at(u + h, v) - patch.f_at(u - h, v)) * (0.5 / h);
    SplitQuat fv = (patch.f_at(u, v + h) - patch.f_at(u, v - h)) * (0.5 / h);
    SplitQuat Nu = (patch.N_at(u + h, v) - patch.N_at(u - h, v)) * (0.5 / h);
    SplitQuat Nv = (patch.N_at(u, v + h) - patch.N_at(u, v - h)) * (0.5 / h);
    FormsSample s;
    s.E = inner(fu, fu);
    s.F = inner(fu, fv);
    s.G = inner(fv, fv);
    s.e = -inner(fu, Nu);
    s.f2 = -0.5 * (inner(fu, Nv) + inner(fv, Nu));
    s.g = -inner(fv, Nv);
    s.l = inner(Nu, Nu);
    s.m = inner(Nu, Nv);
    s.n = inner(Nv, Nv);
    return s;
}

double GWResidual::max() const {
    return std::max({fuu, fuv, fvv, Nu, Nv});
}

GWResidual gauss_weingarten_residual(const FlatSurfacePatch& patch, double u, double v,
                                     double h) {
    SplitQuat f = patch.f_at(u, v);
    SplitQuat N = patch.N_at(u, v);
    SplitQuat fu = (patch.f_at(u + h, v) - patch.f_at(u - h, v)) * (0.5 / h);
    SplitQuat fv = (patch.f_at(u, v + h) - patch.f_at(u, v - h)) * (0.5 / h);
    SplitQuat fuu = (patch.f_at(u + h, v) - f * 2.0 + patch.f_at(u - h, v)) * (1 / (h * h));
    SplitQuat fvv = (patch.f_at(u, v + h) - f * 2.0 + patch.f_at(u, v - h)) * (1 / (h * h));
    SplitQuat fuv = (patch.f_at(u + h, v + h) - patch.f_at(u + h, v - h) -
                     patch.f_at(u - h, v + h) + patch.f_at(u - h, v - h)) *
                    (0.25 / (h * h));
    SplitQuat Nu = (patch.N_at(u + h, v) - patch.N_at(u - h, v)) * (0.5 / h);
    SplitQuat Nv = (patch.N_at(u, v + h) - patch.N_at(u, v - h)) * (0.5 / h);

    double w1 = patch.omega1_at(u), w2 = patch.omega2_at(v);
    double w = w1 + w2, sw = std::sin(w), cw = std::cos(w);
    double w1p = patch.a1.omega.deriv_at(u);
    double w2p = -patch.a2.omega.deriv_at(v);

    GWResidual r;
    r.fuu = (fuu - (f * -std::cos(2 * w1) + (fu * cw - fv) * (w1p / sw))).enorm();
    r.fuv = (fuv - (f * -std::cos(w1 - w2) + N * sw)).enorm();
    r.fvv = (fvv - (f * -std::cos(2 * w2) - (fu - fv * cw) * (w2p / sw))).enorm();
    r.Nu = (Nu - (fu * std::cos(w1 - w2) - fv * std::cos(2 * w1)) * (1 / sw)).enorm();
    r.Nv = (Nv - (fu * -std::cos(2 * w2) + fv * std::cos(w1 - w2)) * (1 / sw)).enorm();
    return r;
}

CoordinateChart coordinate_chart(const Sampled1D& omega1, const Sampled1D& omega2) {
    auto integrate = [](const Sampled1D& w, bool use_sin) {
        Sampled1D integrand = w;
        integrand.closed = false;
        for (auto& x : integrand.v) x = use_sin ? std::sin(x) : std::cos(x);
        Sampled1D cum = integrand.cumulative();
        double off = cum.at(0.0);
        for (auto& x : cum.v) x -= off;
        return cum;
    };
    CoordinateChart chart;
    chart.X1 = integrate(omega1, false);
    chart.Y1 = integrate(omega1, true);
    chart.X2 = integrate(omega2, false);
    chart.Y2 = integrate(omega2, true);
    return chart;
}

const char* to_string(CompletenessVerdict v) {
    switch (v) {
        case CompletenessVerdict::certified: return "certified";
        case CompletenessVerdict::suspected_incomplete: return "suspected-incomplete";
        default: return "unknown";
    }
}

CompletenessCertificate completeness_check(const Sampled1D& omega1,
                                           const Sampled1D& omega2, double margin,
                                           double tail_tol) {
    CompletenessCertificate cert;
    cert.c1 = omega1.min() + omega2.min();
    cert.c2 = omega1.max() + omega2.max();
    cert.margin = std::min(cert.c1, kPi - cert.c2);
    if (cert.margin >= margin) {
        cert.verdict = CompletenessVerdict::certified;
        cert.witness = "bounds 0 < c1 <= omega1+omega2 <= c2 < pi hold with margin " +
                       std::to_string(cert.margin);
        return cert;
    }

    // Minimum-length monotone staircase path from (0-corner) to the far corner
    // in the Riemannian metric du^2 + 2 cos(omega) du dv + dv^2.
    auto subsample = [](const Sampled1D& w, int target) {
        std::vector<double> vals;
        std::vector<double> params;
        std::size_t n = w.n();
        std::size_t stride = std::max<std::size_t>(1, n / target);
        for (std::size_t m = 0; m <= n; m += stride) {
            params.push_back(w.s0 + w.h * static_cast<double>(m));
            vals.push_back(w.v[m]);
        }
        if (params.back() < w.s_end() - 1e-12) {
            params.push_back(w.s_end());
            vals.push_back(w.v[n]);
        }
        return std::make_pair(params, vals);
    };
    auto [us, w1s] = subsample(omega1, 200);
    auto [vs, w2s] = subsample(omega2, 200);
    const std::size_t NU = us.size(), NV = vs.size();
    std::vector<double> dist(NU * NV, 1e300);
    auto idx = [&](std::size_t i, std::size_t j) { return i * NV + j; };
    dist[0] = 0;
    for (std::size_t i = 0; i < NU; ++i) {
        for (std::size_t j = 0; j < NV; ++j) {
            double d = dist[idx(i, j)];
            if (d >= 1e300) continue;
            if (i + 1 < NU) {
                double len = us[i + 1] - us[i];
                dist[idx(i + 1, j)] = std::min(dist[idx(i + 1, j)], d + len);
            }
            if (j + 1 < NV) {
                double len = vs[j + 1] - vs[j];
                dist[idx(i, j + 1)] = std::min(dist[idx(i, j + 1)], d + len);
            }
            if (i + 1 < NU && j + 1 < NV) {
                double du = us[i + 1] - us[i], dv = vs[j + 1] - vs[j];
                double cw = std::cos(0.5 * (w1s[i] + w1s[i + 1]) +
                                     0.5 * (w2s[j] + w2s[j + 1]));
                double q = du * du + 2 * cw * du * dv + dv * dv;
                double len = std::sqrt(std::max(q, 0.0));
                dist[idx(i + 1, j + 1)] = std::min(dist[idx(i + 1, j + 1)], d + len);
            }
        }
    }
    cert.witness_length = dist[idx(NU - 1, NV - 1)];
    // Contribution of the last parameter decade along the escape.
    double u_cut = us.front() + 0.1 * (us.back() - us.front());
    double v_cut = vs.front() + 0.1 * (vs.back() - vs.front());
    std::size_t ic = 0, jc = 0;
    while (ic + 1 < NU && us[ic] < u_cut) ++ic;
    while (jc + 1 < NV && vs[jc] < v_cut) ++jc;
    cert.witness_tail = cert.witness_length - dist[idx(ic, jc)];
    if (cert.witness_tail <= tail_tol) {
        cert.verdict = CompletenessVerdict::suspected_incomplete;
        std::ostringstream w;
        w << "monotone grid path to (" << us.back() << ", " << vs.back()
          << ") of length " << cert.witness_length << "; last-decade contribution "
          << cert.witness_tail;
        cert.witness = w.str();
    } else {
        cert.verdict = CompletenessVerdict::unknown;
        cert.witness = "no finite-length divergent staircase path found at grid scale";
    }
    return cert;
}

TorusRecord torus_check(const FlatSurfacePatch& patch) {
    TorusRecord rec;
    if (!patch.a1.front_closed || !patch.a2.front_closed) {
        rec.torus = false;
        return rec;
    }
    rec.closure1 = closure_detect(patch.a1, patch.a1.front_period);
    rec.closure2 = closure_detect(patch.a2, patch.a2.front_period);
    rec.torus = rec.closure1.closed && rec.closure2.closed;

    auto beta_scan = [&](const AsymptoticCurve& a, double& min_speed, double& closure,
                         double& ident) {
        const SampledQuat& s = a.a;
        SampledQuat beta;
        beta.s0 = s.s0;
        beta.h = s.h;
        beta.closed = false;
        beta.v.reserve(s.v.size());
        for (const auto& z : s.v) beta.v.push_back(z * SplitQuat::J() * conj(z));
        min_speed = 1e300;
        ident = 0;
        for (std::size_t m = 0; m < beta.v.size(); ++m) {
            double u = s.s0 + s.h * static_cast<double>(m);
            SplitQuat bp = beta.deriv_at(u);
            SplitQuat ap = s.deriv_at(u);
            min_speed = std::min(min_speed, std::sqrt(std::fabs(inner(bp, bp))));
            ident = std::max(ident, (conj(beta.v[m]) * bp + s.v[m] * conj(ap) * 2.0).enorm());
        }
        closure = (beta.v.back() - beta.v.front()).enorm();
    };
    beta_scan(patch.a1, rec.beta1_min_speed, rec.beta1_closure, rec.beta_identity_residual);
    double ident2 = 0;
    beta_scan(patch.a2, rec.beta2_min_speed, rec.beta2_closure, ident2);
    rec.beta_identity_residual = std::max(rec.beta_identity_residual, ident2);
    return rec;
}

std::vector<CheckResult> verify_patch(const FlatSurfacePatch& patch, bool parallel) {
    const GridSpec& g = patch.grid;
    const int nu = g.nu(), nv = g.nv();
    const double h = 1e-3;

    // chart built from the lifts' fine omega samples: the coarse grid axes
    // limit the FD chart-gradient check to O(hu^3)
    Sampled1D w2fine = patch.a2.omega;
    for (auto& w : w2fine.v) w = kPi - w;
    CoordinateChart chart = coordinate_chart(patch.a1.omega, w2fine);

    double r_forms = 0, r_gw = 0, r_normal = 0, r_asym = 0, r_chart = 0, r_iso = 0,
           r_mani = 0;
    double min_sin = 1e300;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel) reduction(max:r_forms, r_gw, \
    r_normal, r_asym, r_chart, r_iso, r_mani) reduction(min:min_sin)
#endif
    for (int iu = 1; iu < nu; ++iu) {
        double u = g.u(iu);
        for (int iv = 1; iv < nv; ++iv) {
            double v = g.v(iv);
            double w1 = patch.omega1[iu], w2 = patch.omega2[iv];
            min_sin = std::min(min_sin, std::sin(w1 + w2));

            FormsSample mf = measured_forms(patch, u, v, h);
            FormsSample cf = closed_forms(w1, w2);
            double d = std::fabs(mf.E - cf.E);
            d = std::max(d, std::fabs(mf.F - cf.F));
            d = std::max(d, std::fabs(mf.G - cf.G));
            d = std::max(d, std::fabs(mf.f2 - cf.f2));
            d = std::max(d, std::fabs(mf.l - cf.l));
            d = std::max(d, std::fabs(mf.m - cf.m));
            d = std::max(d, std::fabs(mf.n - cf.n));
            r_forms = std::max(r_forms, d);
            r_asym = std::max(r_asym, std::max(std::fabs(mf.e), std::fabs(mf.g)));

            r_gw = std::max(r_gw, gauss_weingarten_residual(patch, u, v, h).max());

            const SplitQuat& f = patch.f_node(iu, iv);
            const SplitQuat& N = patch.N_node(iu, iv);
            SplitQuat fu = (patch.f_at(u + h, v) - patch.f_at(u - h, v)) * (0.5 / h);
            SplitQuat fv = (patch.f_at(u, v + h) - patch.f_at(u, v - h)) * (0.5 / h);
            SplitQuat cr = cross(AdSPoint(f), fu, fv, 1e-5);
            r_normal = std::max(r_normal, (N - cr * (1.0 / std::sin(w1 + w2))).enorm());

            double mani = std::fabs(inner(f, f) + 1);
            mani = std::max(mani, std::fabs(inner(N, N) - 1));
            mani = std::max(mani, std::fabs(inner(N, f)));
            mani = std::max(mani, std::fabs(inner(N, fu)));
            mani = std::max(mani, std::fabs(inner(N, fv)));
            r_mani = std::max(r_mani, mani);

            double xu = (chart.X1.at(u + h) - chart.X1.at(u - h)) * (0.5 / h);
            double yu = (chart.Y1.at(u + h) - chart.Y1.at(u - h)) * (0.5 / h);
            double xv = (chart.X2.at(v + h) - chart.X2.at(v - h)) * (0.5 / h);
            double yv = -(chart.Y2.at(v + h) - chart.Y2.at(v - h)) * (0.5 / h);
            double dc = std::fabs(xu - std::cos(w1));
            dc = std::max(dc, std::fabs(yu - std::sin(w1)));
            dc = std::max(dc, std::fabs(xv - std::cos(w2)));
            dc = std::max(dc, std::fabs(yv + std::sin(w2)));
            r_chart = std::max(r_chart, dc);

            double di = std::fabs((-xu * xu + yu * yu) - cf.E);
            di = std::max(di, std::fabs((-xu * xv + yu * yv) - cf.F));
            di = std::max(di, std::fabs((-xv * xv + yv * yv) - cf.G));
            r_iso = std::max(r_iso, di);
        }
    }

    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, double res, double tol) {
        out.push_back({name, res, tol, res <= tol});
    };
    add("forms_agreement", r_forms, 1e-4);
    add("gauss_weingarten", r_gw, 1e-3);
    add("normal_identity", r_normal, 1e-5);
    add("asymptotic_directions", r_asym, 1e-5);
    add("chart_gradient", r_chart, 1e-5);
    add("chart_isometry", r_iso, 1e-5);
    add("on_manifold", r_mani, 1e-6);
    out.push_back({"sine_positivity_min", min_sin, 0.0, min_sin > 0});
    return out;
}

void export_csv(const FlatSurfacePatch& patch, const std::string& path) {
    const GridSpec& g = patch.grid;
    std::string body = "u,v,x0,x1,x2,x3,N0,N1,N2,N3,omega1,omega2\n";
    for (int iu = 0; iu <= g.nu(); ++iu) {
        for (int iv = 0; iv <= g.nv(); ++iv) {
            const SplitQuat& f = patch.f_node(iu, iv);
            const SplitQuat& N = patch.N_node(iu, iv);
            body += format17(g.u(iu)) + "," + format17(g.v(iv)) + "," + format17(f.re) +
                    "," + format17(f.i) + "," + format17(f.j) + "," + format17(f.k) +
                    "," + format17(N.re) + "," + format17(N.i) + "," + format17(N.j) +
                    "," + format17(N.k) + "," + format17(patch.omega1[iu]) + "," +
                    format17(patch.omega2[iv]) + "\n";
        }
    }
    write_file_atomic(path, body);
}

void export_obj(const FlatSurfacePatch& patch, const std::string& path,
                bool hopf_projection) {
    const GridSpec& g = patch.grid;
    const int nv = g.nv();
    std::string body = "o flat_patch\n";
    for (int iu = 0; iu <= g.nu(); ++iu) {
        for (int iv = 0; iv <= nv; ++iv) {
            const SplitQuat& f = patch.f_node(iu, iv);
            double x, y, z;
            if (hopf_projection) {
                SplitQuat p = f * SplitQuat::I() * conj(f);
                x = p.i; y = p.j; z = p.k;
            } else {  // drop the x1 coordinate (timelike fiber direction of h_i)
                x = f.re; y = f.j; z = f.k;
            }
            body += "v " + format17(x) + " " + format17(y) + " " + format17(z) + "\n";
        }
    }
    for (int iu = 0; iu < g.nu(); ++iu) {
        for (int iv = 0; iv < nv; ++iv) {
            int a = iu * (nv + 1) + iv + 1;
            int b = a + nv + 1;
            body += "f " + std::to_string(a) + " " + std::to_string(b) + " " +
                    std::to_string(b + 1) + "\n";
            body += "f " + std::to_string(a) + " " + std::to_string(b + 1) + " " +
                    std::to_string(a + 1) + "\n";
        }
    }
    write_file_atomic(path, body);
}

}  // namespace adsflat
