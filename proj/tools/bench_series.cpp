// Benchmark: OpenMP batch sampling against the serial reference.
// Each grid point is an independent beta-quantile inversion, so the
// kernel scales with the thread count.

#include "collapse/core.hpp"
#include "collapse/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double run_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 200000;
    const double gamma = argc > 2 ? std::atof(argv[2]) : -4.0;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("sampling n=%d points of r(t), gamma=%g\n", n, gamma);

    const collapse::CollapseSolution sol(gamma);

    collapse::SampleSeries serial, parallel;
    const double ms_serial = run_ms([&] { serial = collapse::sample_explicit_serial(sol, n); });
    const double ms_parallel = run_ms([&] { parallel = collapse::sample_explicit(sol, n); });

    bool identical = serial.points.size() == parallel.points.size();
    for (size_t i = 0; identical && i < serial.points.size(); i++) {
        identical = serial.points[i].t == parallel.points[i].t &&
                    serial.points[i].r == parallel.points[i].r &&
                    serial.points[i].rdot == parallel.points[i].rdot;
    }

    std::printf("serial:   %10.2f ms\n", ms_serial);
    std::printf("parallel: %10.2f ms\n", ms_parallel);
    std::printf("speedup:  %10.2fx\n", ms_serial / ms_parallel);
    std::printf("bit-identical results: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
