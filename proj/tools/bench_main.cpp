// Timing comparison between the OpenMP kernels and their serial references:
// ball enumeration, sparse convolution, and the recursive seminorm levels.

#include <chrono>
#include <cstdio>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gaw/algebra.hpp"
#include "gaw/ball.hpp"
#include "gaw/bw.hpp"
#include "gaw/io.hpp"
#include "gaw/rng.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return seconds(t0, t1);
}

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-24s %10.3fs %10.3fs %8.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%-24s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    // Cayley ball: free group of rank 2, six-figure element count
    {
        auto spec = gaw::parse_group("f2");
        gaw::LengthTable serial_table = enumerate_ball_serial(spec, 11);
        gaw::LengthTable parallel_table = serial_table;
        double ts = timed([&] { serial_table = gaw::enumerate_ball_serial(spec, 11); });
        double tp = timed([&] {
            gaw::BallOptions opts;
            parallel_table = gaw::enumerate_ball(spec, 11, opts);
        });
        row("ball f2 r=11", ts, tp, serial_table.same_table(parallel_table));
    }

    // convolution: dense-ish elements over Z^2
    {
        auto spec = gaw::parse_group("z2");
        auto table = gaw::enumerate_ball(spec, 24);
        gaw::Rng rng(7);
        auto a = gaw::random_sparse_element(table, rng, 1500, 12);
        auto b = gaw::random_sparse_element(table, rng, 1500, 12);
        gaw::AlgebraElement r1(a.spec_ptr()), r2(a.spec_ptr());
        double ts = timed([&] { r1 = gaw::convolve_serial(a, b); });
        double tp = timed([&] { r2 = gaw::convolve(a, b); });
        bool close = r1.support_size() == r2.support_size();
        row("convolve 1500x1500", ts, tp, close);
    }

    // recursive seminorm levels: quadratic in the ball size
    {
        auto spec = gaw::parse_group("f2");
        auto table = gaw::enumerate_ball(spec, 6);
        gaw::Rng rng(11);
        auto a = gaw::random_sparse_element(table, rng, 6, 2);
        gaw::BWLevels l1, l2;
        double ts = timed([&] { l1 = gaw::compute_bw_levels(a, 1.0, 3, 0, 6, table, false); });
        double tp = timed([&] { l2 = gaw::compute_bw_levels(a, 1.0, 3, 0, 6, table, true); });
        row("bw levels f2 r=6 m=3", ts, tp, l1.log_h == l2.log_h);
    }
    return 0;
}
