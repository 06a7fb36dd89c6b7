#pragma once

#include <string>

namespace collapse {

/// Which polynomial family approximates r(t):
///   PowerLaw (gamma <= -1):  (1 - x^2)^p
///   TwoTerm  (gamma >  -1):  q(1-|x|) - (q-1)(1-|x|)^{q/(q-1)}
/// with x = t/tau.
enum class ApproxBranch { PowerLaw, TwoTerm };

/// The four shape-parameter choices:
///   P1: p = 2/(1-gamma)        (gamma strictly below -1; exact end-slope scaling)
///   P2: p = tau^2/2            (gamma <= -1; matches rddot(0) = -1)
///   Q1: q = eta B(eta, 1/2)    (gamma > -1; matches rdot(tau))
///   Q2: q = tau^2/(tau^2 - 1)  (gamma > -1; matches rddot(0) = -1)
enum class ApproxShape { P1, P2, Q1, Q2 };

ApproxShape parse_shape(const std::string& name);
const char* to_string(ApproxShape s);

/// A resolved approximation: branch and shape value for a given gamma.
struct ApproxSpec {
    double gamma;
    ApproxBranch branch;
    ApproxShape shape;
    double value;  // the resolved p or q
    double tau;    // collapse time of gamma, cached for evaluation
};

/// Resolve a shape choice for gamma; throws unsupported_error if the shape
/// does not apply to gamma's regime (P1/P2 need gamma <= -1, P1 strictly
/// below; Q1/Q2 need gamma > -1).
ApproxSpec resolve_shape(double gamma, ApproxShape shape);

/// Evaluate the approximation at |t| <= tau.
double evaluate_approx(const ApproxSpec& spec, double t);

/// Max-abs and RMS error of the approximation against the exact solution
/// on a uniform n-point grid over [0, tau].
struct ApproxErrorReport {
    double gamma;
    ApproxShape shape;
    int n_grid;
    double max_abs_err;
    double rms_err;
};

ApproxErrorReport approx_error_report(double gamma, ApproxShape shape, int n_grid);

}  // namespace collapse
