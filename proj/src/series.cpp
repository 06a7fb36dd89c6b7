#include "collapse/series.hpp"

#include "collapse/errors.hpp"
#include "collapse/refode.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <utility>

namespace collapse {

const char* to_string(SampleSource s) {
    switch (s) {
        case SampleSource::Explicit: return "explicit";
        case SampleSource::Oracle: return "oracle";
        case SampleSource::Approx: return "approx";
        case SampleSource::Parametric: return "parametric";
    }
    return "?";
}

namespace {

double grid_time(double tau, int i, int n) {
    // ratio-first so that i = n-1 lands on tau exactly
    return tau * (static_cast<double>(i) / (n - 1));
}

Sample explicit_point(const CollapseSolution& sol, double t) {
    return Sample{t, evaluate_r(sol, t), evaluate_rdot(sol, t)};
}

}  // namespace

SampleSeries sample_explicit_serial(const CollapseSolution& sol, int n) {
    if (n < 2) throw domain_error("sample_explicit: n must be >= 2");
    SampleSeries series;
    series.source = SampleSource::Explicit;
    series.points.resize(n);
    for (int i = 0; i < n; i++) {
        series.points[i] = explicit_point(sol, grid_time(sol.tau, i, n));
    }
    return series;
}

SampleSeries sample_explicit(const CollapseSolution& sol, int n) {
    if (n < 2) throw domain_error("sample_explicit: n must be >= 2");
    SampleSeries series;
    series.source = SampleSource::Explicit;
    series.points.resize(n);

    // Exceptions must not escape the parallel region; capture the first
    // one and rethrow after the join.
    std::exception_ptr error;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; i++) {
        try {
            series.points[i] = explicit_point(sol, grid_time(sol.tau, i, n));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return series;
}

SampleSeries sample_approx(const ApproxSpec& spec, int n) {
    if (n < 2) throw domain_error("sample_approx: n must be >= 2");
    SampleSeries series;
    series.source = SampleSource::Approx;
    series.points.resize(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; i++) {
        const double t = grid_time(spec.tau, i, n);
        const double x = t / spec.tau;
        double rdot;
        if (spec.branch == ApproxBranch::PowerLaw) {
            const double base = (1.0 - x) * (1.0 + x);
            rdot = base <= 0.0 ? -std::numeric_limits<double>::infinity()
                               : -2.0 * spec.value * x / spec.tau * std::pow(base, spec.value - 1.0);
        } else {
            const double q = spec.value;
            const double u = 1.0 - x;
            rdot = (-q + q * std::pow(u, 1.0 / (q - 1.0))) / spec.tau;
        }
        series.points[i] = Sample{t, evaluate_approx(spec, t), rdot};
    }
    return series;
}

SampleSeries sample_parametric(int n) {
    if (n < 2) throw domain_error("sample_parametric: n must be >= 2");
    constexpr double kPi = 3.14159265358979323846264338327950288;
    SampleSeries series;
    series.source = SampleSource::Parametric;
    series.points.resize(n);
    for (int i = 0; i < n; i++) {
        const ParametricSample p = parametric_tophat(kPi * (static_cast<double>(i) / (n - 1)));
        // rdot from the integral of motion at gamma = -2
        double rdot;
        if (p.r <= 0.0) {
            rdot = -std::numeric_limits<double>::infinity();
        } else if (p.r >= 1.0) {
            rdot = 0.0;
        } else {
            rdot = -std::sqrt(2.0 * (1.0 / p.r - 1.0));
        }
        series.points[i] = Sample{p.t, p.r, rdot};
    }
    return series;
}

}  // namespace collapse
