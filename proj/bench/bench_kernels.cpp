// Times the OpenMP kernels against their serial reference on the three hot
// sweeps: certifier grid reductions, boundary sampling, and the injectivity
// ring scan. The serial and parallel results must match bit for bit; any
// divergence is reported as a failure.

#include <chrono>
#include <cstdio>

#include "logharm/analysis.hpp"
#include "logharm/builtins.hpp"
#include "logharm/geometry.hpp"
#include "logharm/parallel.hpp"

using namespace logharm;
using clock_type = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = clock_type::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(clock_type::now() - t0).count());
    }
    return best;
}

void report_row(const char* label, double serial, double parallel, bool identical) {
    std::printf("%-28s %10.4f ms %10.4f ms %8.2fx   %s\n", label, serial * 1e3, parallel * 1e3,
                serial / parallel, identical ? "identical" : "MISMATCH");
    std::fflush(stdout);
}

}  // namespace

int main() {
    const LogHarmonicMap koebe({0.3, 0.1}, builtin::koebe_factor(0.25), builtin::one());
    SampleGrid grid;
    grid.radii = SampleGrid::up_to(0.9, 0.01, 1).radii;  // 90 rings
    grid.angles_per_ring = 2048;

    std::printf("threads: %d (cap with LOGHARM_THREADS)\n", par::threads());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    // certifier margin reduction over ~184k grid points
    {
        const auto margin = [&](std::size_t i) {
            return koebe.starlike_functional(grid.point(i)).real() - 0.25;
        };
        par::MinResult s, p;
        const double ts =
            time_best_of(3, [&] { s = par::sweep_min_serial(grid.point_count(), margin); });
        const double tp =
            time_best_of(3, [&] { p = par::sweep_min_parallel(grid.point_count(), margin); });
        report_row("starlike margin sweep", ts, tp, s.value == p.value && s.index == p.index);
    }

    // Jacobian bound margins (two map evaluations per point)
    {
        const double mod_gamma = std::abs(koebe.gamma());
        const auto margin = [&](std::size_t i) {
            const Complex z = grid.point(i);
            const double r = std::abs(z);
            const double fz2 = std::norm(koebe.wirtinger(z).f_z);
            const double jac = koebe.jacobian(z);
            const double common = (1.0 - mod_gamma * mod_gamma) * (1.0 - r * r);
            const double lower = common / ((1.0 + mod_gamma * r) * (1.0 + mod_gamma * r)) * fz2;
            const double upper = (r < mod_gamma)
                ? common / ((1.0 - mod_gamma * r) * (1.0 - mod_gamma * r)) * fz2
                : fz2;
            return std::min(jac - lower, upper - jac);
        };
        par::MinResult s, p;
        const double ts =
            time_best_of(3, [&] { s = par::sweep_min_serial(grid.point_count(), margin); });
        const double tp =
            time_best_of(3, [&] { p = par::sweep_min_parallel(grid.point_count(), margin); });
        report_row("jacobian bounds sweep", ts, tp, s.value == p.value && s.index == p.index);
    }

    // boundary sampling, 1<<18 points
    {
        const LogHarmonicMap exp_map({0.0, 0.0}, builtin::exp_cz({2.0, 0.0}, 64, 0.95),
                                     builtin::one(64, 0.95));
        const int n = 1 << 18;
        std::vector<Complex> serial_pts, parallel_pts;
        const double ts = time_best_of(3, [&] {
            setenv("LOGHARM_THREADS", "1", 1);
            serial_pts = sample_boundary(exp_map, 0.9, n).points;
            unsetenv("LOGHARM_THREADS");
        });
        const double tp =
            time_best_of(3, [&] { parallel_pts = sample_boundary(exp_map, 0.9, n).points; });
        report_row("boundary sampling", ts, tp, serial_pts == parallel_pts);
    }

    // one injectivity probe of z e^{2z} past the fold
    {
        const LogHarmonicMap exp_map({0.0, 0.0}, builtin::exp_cz({2.0, 0.0}, 64, 0.95),
                                     builtin::one(64, 0.95));
        std::optional<CollisionPair> s, p;
        const double ts = time_best_of(2, [&] {
            setenv("LOGHARM_THREADS", "1", 1);
            s = find_collision(exp_map, 0.55, 0.005, 512);
            unsetenv("LOGHARM_THREADS");
        });
        const double tp = time_best_of(2, [&] { p = find_collision(exp_map, 0.55, 0.005, 512); });
        const bool same = s.has_value() == p.has_value() &&
                          (!s || (s->z1 == p->z1 && s->z2 == p->z2));
        report_row("injectivity probe", ts, tp, same);
    }

    return 0;
}
