#include "adsflat/lift.hpp"

#include <algorithm>
#include <cmath>

namespace adsflat {

namespace {

constexpr double kPi = 3.14159265358979323846;

SplitQuat omega_dir(double w) { return {0, std::cos(w), 0, std::sin(w)}; }

// One RK4 step of a' = a p(omega(u)) followed by renormalization.
SplitQuat rk4_step(const SplitQuat& a, double u, double hs, const Sampled1D& omega) {
    SplitQuat p0 = omega_dir(omega.at(u));
    SplitQuat pm = omega_dir(omega.at(u + hs / 2));
    SplitQuat p1 = omega_dir(omega.at(u + hs));
    SplitQuat k1 = a * p0;
    SplitQuat k2 = (a + k1 * (hs / 2)) * pm;
    SplitQuat k3 = (a + k2 * (hs / 2)) * pm;
    SplitQuat k4 = (a + k3 * hs) * p1;
    return renormalize_ads(a + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (hs / 6));
}

std::vector<SplitQuat> integrate(const SplitQuat& start, double u_from, long n_steps,
                                 double hs, int refine, const Sampled1D& omega) {
    std::vector<SplitQuat> out;
    out.reserve(n_steps + 1);
    out.push_back(start);
    SplitQuat a = start;
    double sub = hs / refine;
    for (long m = 0; m < n_steps; ++m) {
        double u = u_from + hs * static_cast<double>(m);
        for (int r = 0; r < refine; ++r) a = rk4_step(a, u + sub * r, sub, omega);
        out.push_back(a);
    }
    return out;
}

double projection_residual(const SampledQuat& a, const FrontCurve& front) {
    double worst = 0;
    std::size_t count = a.v.size();
    std::size_t stride = std::max<std::size_t>(1, count / 64);
    for (std::size_t m = 0; m < count; m += stride) {
        double u = a.s0 + a.h * static_cast<double>(m);
        SplitQuat g = a.v[m] * SplitQuat::I() * conj(a.v[m]);
        SplitQuat n = a.v[m] * SplitQuat::K() * conj(a.v[m]);
        worst = std::max(worst, (g - front.gamma.at(u)).enorm());
        worst = std::max(worst, (n - front.nu.at(u)).enorm());
    }
    return worst;
}

}  // namespace

SplitQuat AsymptoticCurve::at(double u) const {
    if (front_closed && eps != 0 && front_period > 0) {
        double L = front_period;
        double m = std::floor((u - a.s0) / L);
        double sign = (eps == 1 || std::fmod(std::fabs(m), 2.0) < 0.5) ? 1.0 : -1.0;
        return a.at(u - m * L) * sign;
    }
    return a.at(u);
}

double AsymptoticCurve::omega_at(double u) const { return omega.at(u); }

AsymptoticCurve asymptotic_lift(const FrontCurve& front, int sign) {
    if (!front.has_omega())
        throw std::invalid_argument("asymptotic_lift: front must be prepared (omega set)");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("asymptotic_lift: sign must be +1 or -1");

    const double h = front.h();
    AsymptoticCurve out;
    out.omega = front.omega;
    out.front_closed = front.closed();
    out.front_period = front.closed() ? front.period() : 0;
    out.a.h = h;
    out.a.s0 = front.s0();
    out.a.closed = false;

    // base point (i, k) lifts to 1; the flipped-normal base (i, -k) lifts to i
    // (flipping nu corresponds to a -> a i)
    SplitQuat nu0 = front.nu.at(0.0);
    double nu0k = inner(nu0, SplitQuat::K());
    SplitQuat start;
    if ((front.gamma.at(0.0) - SplitQuat::I()).enorm() > 1e-6 ||
        std::fabs(std::fabs(nu0k) - 1) > 1e-6)
        throw std::invalid_argument(
            "asymptotic_lift: front base point must be (i, k) or (i, -k); "
            "run prepare_front first");
    start = (nu0k > 0 ? SplitQuat::one() : SplitQuat::I()) * static_cast<double>(sign);
    const double tol = 1e-6;
    for (int refine = 1; refine <= 8; refine *= 2) {
        std::vector<SplitQuat> samples;
        if (front.closed()) {
            samples = integrate(start, 0, static_cast<long>(front.gamma.n()), h, refine,
                                front.omega);
        } else {
            long n_neg = std::lround(-front.s0() / h);
            long n_pos = static_cast<long>(front.gamma.n()) - n_neg;
            auto fwd = integrate(start, 0, n_pos, h, refine, front.omega);
            auto bwd = integrate(start, 0, n_neg, -h, refine, front.omega);
            samples.reserve(n_neg + n_pos + 1);
            for (long m = n_neg; m >= 1; --m) samples.push_back(bwd[m]);
            for (auto& z : fwd) samples.push_back(z);
        }
        out.a.v = std::move(samples);
        if (projection_residual(out.a, front) <= tol) break;
        if (refine == 8)
            throw std::runtime_error(
                "asymptotic_lift: projection residual above tolerance after refinement");
    }

    if (front.closed()) {
        ClosureRecord rec = closure_detect(out, front.period(), tol);
        out.eps = rec.closed ? rec.eps : 0;
    }
    return out;
}

ReparametrizedCurve asymptotic_reparametrize(const AmbientCurve& curve, double tol) {
    const SampledQuat& c = curve.c;
    const std::size_t count = c.v.size();
    if (count < 5) throw std::invalid_argument("asymptotic_reparametrize: too few samples");
    if (c.s0 > 0 || c.s_end() < 0)
        throw std::invalid_argument("asymptotic_reparametrize: domain must contain 0");

    Sampled1D lambda;
    lambda.s0 = c.s0;
    lambda.h = c.h;
    lambda.v.resize(count);
    for (std::size_t m = 0; m < count; ++m) {
        double s = c.s0 + c.h * static_cast<double>(m);
        SplitQuat p = conj(c.v[m]) * c.deriv_at(s);
        if (std::fabs(p.re) > tol || std::fabs(p.j) > tol)
            throw std::invalid_argument(
                "asymptotic_reparametrize: <c', c j> = 0 violated, residual " +
                std::to_string(std::max(std::fabs(p.re), std::fabs(p.j))));
        double sp = std::hypot(p.i, p.k);
        if (!(sp > 1e-12))
            throw std::invalid_argument("asymptotic_reparametrize: curve not regular");
        lambda.v[m] = sp;
    }

    Sampled1D cum = lambda.cumulative();
    double off = cum.at(0.0);
    Sampled1D u_of_s = cum;
    for (auto& y : u_of_s.v) y -= off;

    double h = c.h;
    double tmin = -off, tmax = cum.v.back() - off;
    long jmin = static_cast<long>(std::ceil(tmin / h - 1e-9));
    long jmax = static_cast<long>(std::floor(tmax / h + 1e-9));

    AsymptoticCurve out;
    out.a.s0 = h * static_cast<double>(jmin);
    out.a.h = h;
    out.a.v.reserve(jmax - jmin + 1);
    for (long j = jmin; j <= jmax; ++j) {
        double s = cum.inverse_at(off + h * static_cast<double>(j));
        out.a.v.push_back(renormalize_ads(c.at(s)));
    }
    out.omega = angle_of(out);
    return {out, u_of_s};
}

Sampled1D angle_of(const AsymptoticCurve& c) {
    const SampledQuat& a = c.a;
    const std::size_t count = a.v.size();
    std::vector<double> cosw(count), sinw(count);
    bool all_pos = true;
    std::size_t rep = 0;
    double rep_abs = 2;
    for (std::size_t m = 0; m < count; ++m) {
        double u = a.s0 + a.h * static_cast<double>(m);
        SplitQuat p = conj(a.v[m]) * a.deriv_at(u);
        double norm = std::hypot(p.i, p.k);
        cosw[m] = p.i / norm;
        sinw[m] = p.k / norm;
        if (!(sinw[m] > 0)) all_pos = false;
        if (std::fabs(sinw[m]) < rep_abs) {
            rep_abs = std::fabs(sinw[m]);
            rep = m;
        }
    }
    std::vector<double> theta(count);
    theta[0] = std::atan2(sinw[0], cosw[0]);
    for (std::size_t m = 1; m < count; ++m) {
        double raw = std::atan2(sinw[m], cosw[m]);
        double delta = raw - std::fmod(theta[m - 1], 2 * kPi);
        delta -= 2 * kPi * std::round(delta / (2 * kPi));
        theta[m] = theta[m - 1] + delta;
    }
    double shift;
    if (all_pos) {
        shift = 2 * kPi * std::floor(theta[0] / (2 * kPi));
    } else if (rep_abs < 0.1) {
        double target = cosw[rep] < 0 ? kPi : 0.0;
        shift = 2 * kPi * std::round((theta[rep] - target) / (2 * kPi));
    } else {
        shift = 2 * kPi * std::round(theta[0] / (2 * kPi));
    }
    Sampled1D out;
    out.s0 = a.s0;
    out.h = a.h;
    out.closed = false;
    out.v = std::move(theta);
    for (auto& t : out.v) t -= shift;
    return out;
}

ClosureRecord closure_detect(const AsymptoticCurve& c, double L, double tol) {
    SplitQuat a0 = c.a.v.front();
    SplitQuat aL = c.a.at(c.a.s0 + L);
    double rp = (aL - a0).enorm();
    double rm = (aL + a0).enorm();
    ClosureRecord rec;
    rec.eps = rp <= rm ? 1 : -1;
    rec.residual = std::min(rp, rm);
    rec.closed = rec.residual <= tol;
    return rec;
}

}  // namespace adsflat
