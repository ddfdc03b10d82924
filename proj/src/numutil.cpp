#include "adsflat/numutil.hpp"

#include <cmath>
#include <stdexcept>

namespace adsflat {

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(fa, flm, fm, a, m);
    double right = simpson(fm, frm, fb, m, b);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(fa, fm, fb, a, b);
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

Eigen4 jacobi_eigen4(std::array<std::array<double, 4>, 4> A) {
    std::array<std::array<double, 4>, 4> V{};
    for (int i = 0; i < 4; ++i) V[i][i] = 1.0;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off += A[p][q] * A[p][q];
        if (off < 1e-30) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (std::fabs(A[p][q]) < 1e-300) continue;
                double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int r = 0; r < 4; ++r) {
                    double arp = A[r][p], arq = A[r][q];
                    A[r][p] = c * arp - s * arq;
                    A[r][q] = s * arp + c * arq;
                }
                for (int r = 0; r < 4; ++r) {
                    double apr = A[p][r], aqr = A[q][r];
                    A[p][r] = c * apr - s * aqr;
                    A[q][r] = s * apr + c * aqr;
                }
                for (int r = 0; r < 4; ++r) {
                    double vrp = V[r][p], vrq = V[r][q];
                    V[r][p] = c * vrp - s * vrq;
                    V[r][q] = s * vrp + c * vrq;
                }
            }
        }
    }

    Eigen4 out;
    std::array<int, 4> order = {0, 1, 2, 3};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (A[order[j]][order[j]] < A[order[i]][order[i]]) std::swap(order[i], order[j]);
    for (int c = 0; c < 4; ++c) {
        out.values[c] = A[order[c]][order[c]];
        for (int r = 0; r < 4; ++r) out.vectors[c][r] = V[r][order[c]];
    }
    return out;
}

std::array<double, 4> null_direction(const std::vector<std::array<double, 4>>& rows) {
    std::array<std::array<double, 4>, 4> G{};
    for (const auto& r : rows)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) G[i][j] += r[i] * r[j];
    Eigen4 e = jacobi_eigen4(G);
    if (e.values[0] > 1e-12 * (1.0 + e.values[3]))
        throw std::runtime_error("null_direction: system has no null direction");
    return e.vectors[0];
}

}  // namespace adsflat
