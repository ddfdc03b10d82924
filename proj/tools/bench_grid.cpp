// Times the parallel grid kernels against their serial reference twins.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "adsflat/front.hpp"
#include "adsflat/lift.hpp"
#include "adsflat/surface.hpp"

using namespace adsflat;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    FrontCurve f1 = prepare_front(make_front_from_curvature(
        [](double s) { return 1.0 + 0.2 * std::sin(s); }, -3, 3, false));
    FrontCurve f2 = prepare_front(make_front_from_curvature(
        [](double s) { return 2.0 + 0.2 * std::sin(1.3 * s); }, -3, 3, false));
    AdmissiblePair pair = check_admissible(f1, f2);
    AsymptoticCurve l1 = asymptotic_lift(pair.g1);
    AsymptoticCurve l2 = asymptotic_lift(pair.g2);

    GridSpec grid;
    grid.u0 = grid.v0 = -2;
    grid.u1 = grid.v1 = 2;
    grid.hu = grid.hv = 0.005;  // 801 x 801 nodes

    auto t0 = std::chrono::steady_clock::now();
    FlatSurfacePatch serial = synthesize_serial(l1, l2, grid);
    double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    FlatSurfacePatch parallel = synthesize(l1, l2, grid);
    double t_parallel = seconds_since(t0);

    double dev = 0;
    for (std::size_t m = 0; m < serial.f.size(); ++m)
        dev = std::max(dev, (serial.f[m] - parallel.f[m]).enorm());

    std::printf("synthesize  %4d x %4d  serial %.3fs  parallel %.3fs  speedup %.2fx  max dev %.3g\n",
                grid.nu() + 1, grid.nv() + 1, t_serial, t_parallel,
                t_serial / t_parallel, dev);

    t0 = std::chrono::steady_clock::now();
    auto checks_serial = verify_patch(serial, false);
    double v_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto checks_parallel = verify_patch(parallel, true);
    double v_parallel = seconds_since(t0);

    std::printf("verify      %4d x %4d  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                grid.nu() + 1, grid.nv() + 1, v_serial, v_parallel,
                v_serial / v_parallel);
    for (std::size_t m = 0; m < checks_serial.size(); ++m)
        std::printf("  %-28s serial %.3g  parallel %.3g\n",
                    checks_parallel[m].name.c_str(), checks_serial[m].max_residual,
                    checks_parallel[m].max_residual);
    return 0;
}
