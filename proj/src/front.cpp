#include "adsflat/front.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "adsflat/numutil.hpp"

namespace adsflat {

namespace {

constexpr double kPi = 3.14159265358979323846;

SplitQuat unit_h2(const SplitQuat& g) {
    double n = -inner(g, g);
    if (!(n > 0)) throw std::runtime_error("front: gamma left H^2");
    return g * (1.0 / std::sqrt(n));
}

// Gram-Schmidt nu against gamma, then normalize to <nu,nu> = 1.
SplitQuat unit_normal(const SplitQuat& g, const SplitQuat& nu) {
    SplitQuat w = nu + g * inner(nu, g);  // <g,g> = -1
    double n = inner(w, w);
    if (!(n > 0)) throw std::runtime_error("front: nu degenerated");
    return w * (1.0 / std::sqrt(n));
}

struct AngleData {
    std::vector<double> cosw, sinw;
    std::vector<std::size_t> sing;  // sample indices at/next to singular points
    bool singular = false;
};

AngleData raw_angle(const FrontCurve& f) {
    const std::size_t count = f.gamma.v.size();
    AngleData d;
    d.cosw.resize(count);
    d.sinw.resize(count);
    std::vector<double> gp2(count);
    for (std::size_t m = 0; m < count; ++m) {
        double s = f.s0() + f.h() * static_cast<double>(m);
        SplitQuat gp = f.gamma.deriv_at(s);
        SplitQuat np = f.nu.deriv_at(s);
        SplitQuat tau = cross3(f.nu.v[m], f.gamma.v[m]);
        double sr = inner(gp, tau);
        double cr = -inner(np, tau);
        double norm = std::hypot(sr, cr);
        if (!(norm > 1e-12)) throw std::runtime_error("front: not an immersion in TU(H^2)");
        d.cosw[m] = cr / norm;
        d.sinw[m] = sr / norm;
        gp2[m] = inner(gp, gp);
        if (gp2[m] <= 1e-12) {  // |gamma'| <= 1e-6
            d.sing.push_back(m);
            d.singular = true;
        }
    }
    for (std::size_t m = 0; m + 1 < count; ++m) {
        if (d.sinw[m] * d.sinw[m + 1] < 0) {  // transversal cusp between samples
            d.sing.push_back(std::fabs(d.sinw[m]) < std::fabs(d.sinw[m + 1]) ? m : m + 1);
            d.singular = true;
        }
    }
    return d;
}

std::vector<double> unwrap_angle(const AngleData& d) {
    std::vector<double> theta(d.cosw.size());
    theta[0] = std::atan2(d.sinw[0], d.cosw[0]);
    for (std::size_t m = 1; m < theta.size(); ++m) {
        double raw = std::atan2(d.sinw[m], d.cosw[m]);
        double prev = theta[m - 1];
        double delta = raw - std::fmod(prev, 2 * kPi);
        delta -= 2 * kPi * std::round(delta / (2 * kPi));
        theta[m] = prev + delta;
    }
    return theta;
}

FrontCurve reversed(const FrontCurve& f) {
    FrontCurve out;
    out.gamma = f.gamma;
    out.nu = f.nu;
    std::reverse(out.gamma.v.begin(), out.gamma.v.end());
    std::reverse(out.nu.v.begin(), out.nu.v.end());
    if (f.closed()) {
        out.gamma.s0 = 0;
        out.nu.s0 = 0;
    } else {
        out.gamma.s0 = -f.s_end();
        out.nu.s0 = -f.s_end();
    }
    return out;
}

FrontCurve flipped_normal(const FrontCurve& f) {
    FrontCurve out = f;
    for (auto& n : out.nu.v) n = -n;
    if (out.has_omega())
        for (auto& w : out.omega.v) w = 2 * kPi - w;
    return out;
}

// 4x4 matrices of left/right multiplication acting on component vectors.
using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 left_mul_matrix(const SplitQuat& z) {
    Mat4 L{};
    const SplitQuat e[4] = {SplitQuat::one(), SplitQuat::I(), SplitQuat::J(),
                            SplitQuat::K()};
    for (int c = 0; c < 4; ++c) {
        SplitQuat w = z * e[c];
        L[0][c] = w.re; L[1][c] = w.i; L[2][c] = w.j; L[3][c] = w.k;
    }
    return L;
}

Mat4 right_mul_matrix(const SplitQuat& z) {
    Mat4 R{};
    const SplitQuat e[4] = {SplitQuat::one(), SplitQuat::I(), SplitQuat::J(),
                            SplitQuat::K()};
    for (int c = 0; c < 4; ++c) {
        SplitQuat w = e[c] * z;
        R[0][c] = w.re; R[1][c] = w.i; R[2][c] = w.j; R[3][c] = w.k;
    }
    return R;
}

bool front_is_regular(const FrontCurve& f) { return !raw_angle(f).singular; }

}  // namespace

void validate_front(const FrontCurve& front, double tol) {
    if (front.gamma.v.size() != front.nu.v.size() || front.gamma.v.size() < 5)
        throw std::invalid_argument("front: gamma/nu sample mismatch or too short");
    for (std::size_t m = 0; m < front.gamma.v.size(); ++m) {
        double s = front.s0() + front.h() * static_cast<double>(m);
        const SplitQuat& g = front.gamma.v[m];
        const SplitQuat& n = front.nu.v[m];
        SplitQuat gp = front.gamma.deriv_at(s);
        SplitQuat np = front.nu.deriv_at(s);
        double r = std::fabs(inner(g, g) + 1);
        r = std::max(r, std::fabs(inner(n, n) - 1));
        r = std::max(r, std::fabs(inner(g, n)));
        r = std::max(r, std::fabs(inner(gp, n)));
        if (r > tol)
            throw std::runtime_error("front: Legendrian residual " + std::to_string(r) +
                                     " at s = " + std::to_string(s));
        if (inner(gp, gp) + inner(np, np) <= 1e-8)
            throw std::runtime_error("front: immersion condition fails at s = " +
                                     std::to_string(s));
    }
}

CurvatureValue geodesic_curvature(const FrontCurve& front, double s) {
    SplitQuat g = front.gamma.at(s);
    SplitQuat n = front.nu.at(s);
    SplitQuat gp = front.gamma.deriv_at(s);
    SplitQuat np = front.nu.deriv_at(s);
    SplitQuat tau = cross3(n, g);
    double sr = inner(gp, tau);
    double cr = -inner(np, tau);
    double norm = std::hypot(sr, cr);
    CurvatureValue out;
    out.cosw = cr / norm;
    out.sinw = sr / norm;
    out.finite = inner(gp, gp) > 1e-12;
    out.k = out.finite ? out.cosw / out.sinw : 0;
    return out;
}

FrontCurve positive_normal(const FrontCurve& front) {
    AngleData d = raw_angle(front);
    if (!d.singular) {
        std::size_t neg = 0;
        for (double s : d.sinw) neg += (s < 0);
        if (neg == 0) return front;
        if (neg == d.sinw.size()) return flipped_normal(front);
        throw std::runtime_error("positive_normal: sin(omega) changes sign on a regular front");
    }
    double lo = 2, hi = -2;
    for (std::size_t m : d.sing) {
        lo = std::min(lo, d.cosw[m]);
        hi = std::max(hi, d.cosw[m]);
    }
    if (lo < -0.5 && hi > 0.5)
        throw std::runtime_error(
            "positive_normal: singular points carry both orientations; "
            "no branch of cot^-1 fits");
    if (hi <= -0.5) return front;  // cusps already at cos(omega) = -1
    // The normal flip leaves cos(omega) at a cusp unchanged; reversing the
    // parameter negates it.
    return reversed(front);
}

FrontCurve sasaki_reparametrize(const FrontCurve& front) {
    const std::size_t count = front.gamma.v.size();
    Sampled1D speed;
    speed.s0 = front.s0();
    speed.h = front.h();
    speed.closed = front.closed();
    speed.v.resize(count);
    double dev = 0;
    for (std::size_t m = 0; m < count; ++m) {
        double s = front.s0() + front.h() * static_cast<double>(m);
        SplitQuat gp = front.gamma.deriv_at(s);
        SplitQuat np = front.nu.deriv_at(s);
        double sp2 = inner(gp, gp) + inner(np, np);
        if (!(sp2 > 0)) throw std::runtime_error("sasaki_reparametrize: zero Sasaki speed");
        speed.v[m] = 0.5 * std::sqrt(sp2);
        dev = std::max(dev, std::fabs(speed.v[m] - 1.0));
    }
    if (dev <= 1e-9) return front;

    Sampled1D cum = speed.cumulative();
    double off = cum.at(0.0);
    double h = front.h();
    FrontCurve out;
    out.gamma.h = out.nu.h = h;
    out.gamma.closed = out.nu.closed = front.closed();
    std::vector<double> snew;
    if (front.closed()) {
        double T = cum.v.back();
        long n = std::max(8L, std::lround(T / h));
        h = T / static_cast<double>(n);
        out.gamma.h = out.nu.h = h;
        out.gamma.s0 = out.nu.s0 = 0;
        snew.reserve(n + 1);
        for (long j = 0; j <= n; ++j)
            snew.push_back(cum.inverse_at(off + h * static_cast<double>(j)));
    } else {
        double tmin = -off, tmax = cum.v.back() - off;
        long jmin = static_cast<long>(std::ceil(tmin / h - 1e-9));
        long jmax = static_cast<long>(std::floor(tmax / h + 1e-9));
        out.gamma.s0 = out.nu.s0 = h * static_cast<double>(jmin);
        snew.reserve(jmax - jmin + 1);
        for (long j = jmin; j <= jmax; ++j)
            snew.push_back(cum.inverse_at(off + h * static_cast<double>(j)));
    }
    out.gamma.v.reserve(snew.size());
    out.nu.v.reserve(snew.size());
    for (double s : snew) {
        SplitQuat g = unit_h2(front.gamma.at(s));
        out.gamma.v.push_back(g);
        out.nu.v.push_back(unit_normal(g, front.nu.at(s)));
    }
    if (front.closed()) {  // land exactly on the period
        out.gamma.v.back() = out.gamma.v.front();
        out.nu.v.back() = out.nu.v.front();
    }
    return out;
}

namespace {

Sampled1D compute_omega(const FrontCurve& front) {
    AngleData d = raw_angle(front);
    std::vector<double> theta = unwrap_angle(d);
    if (!d.singular) {
        for (double s : d.sinw)
            if (!(s > 0))
                throw std::runtime_error("angle_function: front is not positively oriented");
        double shift = 2 * kPi * std::floor(theta[0] / (2 * kPi));
        for (auto& t : theta) t -= shift;
    } else {
        std::size_t rep = d.sing.front();
        for (std::size_t m : d.sing)
            if (std::fabs(d.sinw[m]) < std::fabs(d.sinw[rep])) rep = m;
        double shift = 2 * kPi * std::round((theta[rep] - kPi) / (2 * kPi));
        for (auto& t : theta) t -= shift;
    }
    double lo = *std::min_element(theta.begin(), theta.end());
    double hi = *std::max_element(theta.begin(), theta.end());
    if (hi - lo >= kPi - 1e-9)
        throw std::runtime_error(
            "angle_function: curvature image covers RP^1, no cot^-1 branch exists");
    Sampled1D out;
    out.s0 = front.s0();
    out.h = front.h();
    out.closed = front.closed();
    out.v = std::move(theta);
    if (out.closed) {
        if (std::fabs(out.v.back() - out.v.front()) > 1e-6)
            throw std::runtime_error("angle_function: omega fails to close up");
        out.v.back() = out.v.front();
    }
    return out;
}

}  // namespace

std::vector<AngleSample> angle_function(const FrontCurve& front) {
    Sampled1D om = front.has_omega() ? front.omega : compute_omega(front);
    std::vector<AngleSample> out;
    out.reserve(om.v.size());
    for (std::size_t m = 0; m < om.v.size(); ++m)
        out.push_back({om.s0 + om.h * static_cast<double>(m), om.v[m]});
    return out;
}

FrontCurve normalize_base(const FrontCurve& front) {
    SplitQuat g0 = front.gamma.at(0.0);
    SplitQuat n0 = front.nu.at(0.0);
    Mat4 A = right_mul_matrix(SplitQuat::I());
    Mat4 B = left_mul_matrix(g0);
    Mat4 C = right_mul_matrix(SplitQuat::K());
    Mat4 D = left_mul_matrix(n0);
    std::vector<std::array<double, 4>> rows;
    for (int r = 0; r < 4; ++r) {
        rows.push_back({A[r][0] - B[r][0], A[r][1] - B[r][1], A[r][2] - B[r][2],
                        A[r][3] - B[r][3]});
        rows.push_back({C[r][0] - D[r][0], C[r][1] - D[r][1], C[r][2] - D[r][2],
                        C[r][3] - D[r][3]});
    }
    auto bv = null_direction(rows);
    SplitQuat b{bv[0], bv[1], bv[2], bv[3]};
    double nb = b.re * b.re + b.i * b.i - b.j * b.j - b.k * b.k;
    if (!(nb > 0)) throw std::runtime_error("normalize_base: alignment solve failed");
    b = b * (1.0 / std::sqrt(nb));
    SplitQuat q = conj(b);

    FrontCurve out = front;
    for (auto& g : out.gamma.v) g = q * g * b;
    for (auto& n : out.nu.v) n = q * n * b;
    if ((out.gamma.at(0.0) - SplitQuat::I()).enorm() > 1e-7 ||
        (out.nu.at(0.0) - SplitQuat::K()).enorm() > 1e-7)
        throw std::runtime_error("normalize_base: residual alignment error");
    return out;
}

FrontCurve prepare_front(const FrontCurve& front) {
    validate_front(front);
    FrontCurve f = sasaki_reparametrize(front);
    f = positive_normal(f);
    f = normalize_base(f);
    f.omega = compute_omega(f);
    return f;
}

FrontCurve make_front_from_curvature(const std::function<double(double)>& omega_fn,
                                     double smin, double smax, bool closed, double h) {
    if (!(h > 0)) throw std::invalid_argument("make_front_from_curvature: step must be > 0");
    if (closed) {
        if (std::fabs(smin) > 1e-12)
            throw std::invalid_argument("make_front_from_curvature: closed fronts start at 0");
    } else if (smin > 0 || smax < 0 || smax - smin < 4 * h) {
        throw std::invalid_argument("make_front_from_curvature: need smin <= 0 <= smax");
    }

    struct Frame {
        SplitQuat g, n;
    };
    auto deriv = [&](double s, const Frame& fr) {
        SplitQuat tau = cross3(fr.n, fr.g);
        double w = omega_fn(s);
        return Frame{tau * (2 * std::sin(w)), tau * (-2 * std::cos(w))};
    };
    auto step = [&](double s, const Frame& fr, double hs) {
        Frame k1 = deriv(s, fr);
        Frame k2 = deriv(s + hs / 2, {fr.g + k1.g * (hs / 2), fr.n + k1.n * (hs / 2)});
        Frame k3 = deriv(s + hs / 2, {fr.g + k2.g * (hs / 2), fr.n + k2.n * (hs / 2)});
        Frame k4 = deriv(s + hs, {fr.g + k3.g * hs, fr.n + k3.n * hs});
        SplitQuat g = fr.g + (k1.g + k2.g * 2.0 + k3.g * 2.0 + k4.g) * (hs / 6);
        SplitQuat n = fr.n + (k1.n + k2.n * 2.0 + k3.n * 2.0 + k4.n) * (hs / 6);
        g = unit_h2(g);
        return Frame{g, unit_normal(g, n)};
    };

    FrontCurve out;
    Frame start{SplitQuat::I(), SplitQuat::K()};
    if (closed) {
        double L = smax;
        long n = std::max(8L, std::lround(L / h));
        double hs = L / static_cast<double>(n);
        out.gamma.s0 = out.nu.s0 = 0;
        out.gamma.h = out.nu.h = hs;
        out.gamma.closed = out.nu.closed = true;
        Frame fr = start;
        out.gamma.v.push_back(fr.g);
        out.nu.v.push_back(fr.n);
        for (long m = 0; m < n; ++m) {
            fr = step(hs * static_cast<double>(m), fr, hs);
            out.gamma.v.push_back(fr.g);
            out.nu.v.push_back(fr.n);
        }
        double res = std::max((out.gamma.v.back() - out.gamma.v.front()).enorm(),
                              (out.nu.v.back() - out.nu.v.front()).enorm());
        if (res > 1e-6)
            throw std::runtime_error(
                "make_front_from_curvature: front does not close over the given "
                "period (residual " + std::to_string(res) + ")");
        out.gamma.v.back() = out.gamma.v.front();
        out.nu.v.back() = out.nu.v.front();
    } else {
        long n_neg = static_cast<long>(std::ceil(-smin / h - 1e-9));
        long n_pos = static_cast<long>(std::ceil(smax / h - 1e-9));
        std::vector<Frame> fwd(n_pos + 1), bwd(n_neg + 1);
        fwd[0] = bwd[0] = start;
        for (long m = 0; m < n_pos; ++m)
            fwd[m + 1] = step(h * static_cast<double>(m), fwd[m], h);
        for (long m = 0; m < n_neg; ++m)
            bwd[m + 1] = step(-h * static_cast<double>(m), bwd[m], -h);
        out.gamma.s0 = out.nu.s0 = -h * static_cast<double>(n_neg);
        out.gamma.h = out.nu.h = h;
        for (long m = n_neg; m >= 1; --m) {
            out.gamma.v.push_back(bwd[m].g);
            out.nu.v.push_back(bwd[m].n);
        }
        for (long m = 0; m <= n_pos; ++m) {
            out.gamma.v.push_back(fwd[m].g);
            out.nu.v.push_back(fwd[m].n);
        }
    }
    Sampled1D om;
    om.s0 = out.gamma.s0;
    om.h = out.gamma.h;
    om.closed = out.gamma.closed;
    om.v.reserve(out.gamma.v.size());
    for (std::size_t m = 0; m < out.gamma.v.size(); ++m)
        om.v.push_back(omega_fn(om.s0 + om.h * static_cast<double>(m)));
    if (om.closed) om.v.back() = om.v.front();
    out.omega = om;
    return out;
}

FrontCurve parallel_front(const FrontCurve& front, double d) {
    double ch = std::cosh(d), sh = std::sinh(d);
    FrontCurve out;
    out.gamma = front.gamma;
    out.nu = front.nu;
    for (std::size_t m = 0; m < front.gamma.v.size(); ++m) {
        out.gamma.v[m] = front.gamma.v[m] * ch + front.nu.v[m] * sh;
        out.nu.v[m] = front.gamma.v[m] * sh + front.nu.v[m] * ch;
    }
    return out;
}

AdmissiblePair check_admissible(const FrontCurve& g1, const FrontCurve& g2,
                                int n_samples) {
    FrontCurve p1 = g1.has_omega() ? g1 : prepare_front(g1);
    FrontCurve p2 = g2.has_omega() ? g2 : prepare_front(g2);
    bool reg1 = front_is_regular(p1);
    bool reg2 = front_is_regular(p2);
    if (!reg1 && !reg2)
        throw AdmissibilityError("check_admissible: at least one front must be regular");

    struct Candidate {
        const FrontCurve* first;
        const FrontCurve* second;
        bool swapped, flip2;
    };
    FrontCurve p2f = reg2 ? p2 : flipped_normal(p2);
    FrontCurve p1f = reg1 ? p1 : flipped_normal(p1);
    std::vector<Candidate> cands;
    if (reg1) {
        cands.push_back({&p1, &p2, false, false});
        if (!reg2) cands.push_back({&p1, &p2f, false, true});
    }
    if (reg2) {
        cands.push_back({&p2, &p1, true, false});
        if (!reg1) cands.push_back({&p2, &p1f, true, true});
    }

    std::ostringstream why;
    for (const auto& c : cands) {
        double hi1 = c.first->omega.max(), lo1 = c.first->omega.min();
        double hi2 = c.second->omega.max(), lo2 = c.second->omega.min();
        double m1 = lo2 - hi1;           // sup omega1 < inf omega2
        double m2 = lo1 - (hi2 - kPi);   // sup omega2 - pi < inf omega1
        double margin = std::min(m1, m2);
        if (margin > 1e-9) {
            AdmissiblePair out;
            out.g1 = *c.first;
            out.g2 = *c.second;
            out.swapped = c.swapped;
            out.flipped2 = c.flip2;
            out.margin = margin;
            std::ostringstream cert;
            cert << "omega1 in [" << lo1 << ", " << hi1 << "], omega2 in [" << lo2
                 << ", " << hi2 << "], angle margin " << margin;
            bool second_regular = hi2 < kPi - 1e-12 && lo2 > 1e-12;
            if (second_regular) {
                double kmargin = std::cos(hi1) / std::sin(hi1) -
                                 std::cos(lo2) / std::sin(lo2);
                cert << "; curvature separation k1 > k2 with margin " << kmargin;
                out.margin = kmargin;
            }
            out.certificate = cert.str();
            return out;
        }
        why << (c.swapped ? "[roles swapped" : "[input order")
            << (c.flip2 ? ", normal flipped] " : "] ") << "omega1 range [" << lo1 << ", "
            << hi1 << "] vs omega2 range [" << lo2 << ", " << hi2
            << "]: margin " << margin << "; ";
    }
    // locate a witness pair of parameters with matching curvature
    std::ostringstream msg;
    msg << "check_admissible: curvature ranges overlap; " << why.str();
    int ns = std::max(8, n_samples);
    double best = 1e300, bu = 0, bv = 0;
    for (int iu = 0; iu <= ns; ++iu) {
        double u = p1.s0() + (p1.period()) * iu / ns;
        double w1 = p1.omega.at(u);
        for (int iv = 0; iv <= ns; ++iv) {
            double v = p2.s0() + (p2.period()) * iv / ns;
            double dw = std::remainder(w1 - p2.omega.at(v), kPi);
            if (std::fabs(dw) < best) {
                best = std::fabs(dw);
                bu = u;
                bv = v;
            }
        }
    }
    msg << "closest curvature match at (u, v) = (" << bu << ", " << bv << ")";
    throw AdmissibilityError(msg.str());
}

}  // namespace adsflat
