#pragma once

#include "collapse/sample.hpp"

#include <limits>

namespace collapse {

/// Controls for the reference Runge-Kutta integration.
struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double r_floor = 1e-6;   // stop before the r -> 0 stiffness
    long max_steps = 2000000;
};

/// Direct numerical integration of rddot = -r^gamma from (r, rdot) = (1, 0)
/// with an embedded Dormand-Prince 5(4) pair and PI step control. Samples
/// are the accepted steps (strictly increasing t). Stops at r <= r_floor,
/// at t > t_max, or when the step size falls below the resolution of t.
/// Independent of the beta/quantile kernels by construction.
SampleSeries integrate_reference(double gamma, const IntegratorConfig& config = {},
                                 double t_max = std::numeric_limits<double>::infinity());

/// One point of the classic parametric gamma = -2 solution,
/// t = (theta + sin theta)/sqrt(8), r = (1 + cos theta)/2, |theta| <= pi.
struct ParametricSample {
    double theta;
    double t;
    double r;
};

ParametricSample parametric_tophat(double theta);

/// Error norms between the explicit solution and the RK oracle.
/// The forward comparison |r_explicit(t_i) - r_oracle(t_i)| runs over the
/// oracle grid where r >= r_floor and |rdot| stays below a conditioning cap
/// (above it, a one-ulp perturbation of t moves r by more than the
/// tolerance, so the final approach is validated through the inverse map
/// t(r) instead). energy_max_resid is the oracle's own integral-of-motion
/// residual, relative to the dominant energy term.
struct ValidationReport {
    double gamma = 0.0;
    int grid_size = 0;           // forward-compared points
    double max_abs_err = 0.0;    // max |delta r| over the forward grid
    double rms_err = 0.0;
    double energy_max_resid = 0.0;
    double t_cover_lo = 0.0;     // forward-compared t range
    double t_cover_hi = 0.0;
    int tail_points = 0;         // points validated through the inverse map
    double tail_max_t_err = 0.0; // max |t(r_i) - t_i| over those points
};

ValidationReport validate_explicit(double gamma, int n_grid, const IntegratorConfig& config = {});

}  // namespace collapse
