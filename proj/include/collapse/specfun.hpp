#pragma once

/// Self-contained special-function kernel: log-gamma, (incomplete) beta,
/// beta quantile, error function and its inverse, Jacobi elliptic cn.
///
/// All functions are pure and thread-safe. Iterative kernels accept an
/// AccuracyPolicy; the defaults reach close to double precision.

namespace collapse::specfun {

/// Tolerance and iteration budget for the iterative kernels.
struct AccuracyPolicy {
    double rel_tol = 1e-14;
    int max_iter = 200;
};

/// ln Gamma(x) for x > 0. Lanczos approximation with a fixed coefficient
/// table; relative error ~1e-15 away from the zeros at x=1 and x=2
/// (both returned exactly).
double log_gamma(double x);

/// ln B(a,b) for a,b > 0, stable for strongly asymmetric arguments.
double log_beta(double a, double b);

/// Complete beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b),
/// evaluated in log space.
double beta_complete(double a, double b);

/// Regularized incomplete beta I(x;a,b) = B(x;a,b)/B(a,b) on x in [0,1].
/// Continued fraction with the symmetry switch at x = (a+1)/(a+b+2).
double reg_inc_beta(double x, double a, double b, const AccuracyPolicy& policy = {});

/// Incomplete beta B(x;a,b) = I(x;a,b) * B(a,b).
double inc_beta(double x, double a, double b, const AccuracyPolicy& policy = {});

/// Beta quantile: the x in [0,1] with I(x;a,b) = p. Damped Newton with a
/// bisection safeguard on [0,1]; endpoints are exact. Throws
/// convergence_error only if the safeguarded iteration exhausts max_iter
/// without reaching the tolerance or machine resolution.
double inv_reg_inc_beta(double p, double a, double b, const AccuracyPolicy& policy = {});

/// Error function, |relative error| ~1e-15; odd in x.
double erf(double x);

/// Inverse of erf on (-1,1): erf(inv_erf(y)) = y. Rational initial guess
/// refined by Newton iterations on erf.
double inv_erf(double y, const AccuracyPolicy& policy = {});

/// Complete elliptic integral of the first kind K(m), parameter convention
/// (m, not modulus k). Quarter period of the Jacobi functions.
double elliptic_k(double m);

/// Jacobi elliptic cosine cn(u|m), parameter convention, m in [0,1].
/// Arithmetic-geometric-mean (descending Landen) evaluation; cn(u|0)=cos u,
/// cn(u|1)=sech u; periodic with period 4K(m).
double jacobi_cn(double u, double m, const AccuracyPolicy& policy = {});

}  // namespace collapse::specfun
