#pragma once

#include "collapse/approx.hpp"
#include "collapse/core.hpp"
#include "collapse/sample.hpp"

namespace collapse {

/// Explicit solution sampled at n uniform times on [0, tau], endpoints
/// exact. Each point is an independent quantile inversion; the OpenMP
/// build evaluates them in parallel and returns bit-identical results to
/// sample_explicit_serial.
SampleSeries sample_explicit(const CollapseSolution& sol, int n);

/// Serial reference implementation of sample_explicit, kept for testing
/// and benchmarking against the parallel kernel.
SampleSeries sample_explicit_serial(const CollapseSolution& sol, int n);

/// Polynomial approximation sampled at n uniform times on [0, tau].
/// rdot slots carry the analytic derivative of the polynomial.
SampleSeries sample_approx(const ApproxSpec& spec, int n);

/// Classic parametric gamma = -2 solution at n uniform theta on [0, pi].
SampleSeries sample_parametric(int n);

}  // namespace collapse
