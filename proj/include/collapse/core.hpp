#pragma once

#include "collapse/specfun.hpp"

namespace collapse {

/// Which side of the critical exponent gamma = -1 a parameter lies on.
enum class Regime { Subcritical, Critical, Supercritical };

/// The control exponent gamma with its derived constants
///   eta   = 1/|1+gamma|
///   alpha = 1/4 + (3-gamma)/(4|1+gamma|)
/// For gamma > -1 alpha equals eta; for gamma < -1 alpha = eta + 1/2.
/// Within the critical band the regime is Critical and eta/alpha are set
/// to +inf (the limit); the error-function branch never reads them.
struct GammaParam {
    double gamma;
    double eta;
    double alpha;
    Regime regime;

    bool critical() const { return regime == Regime::Critical; }
};

/// Classify gamma and derive (eta, alpha). gamma values within
/// critical_band of -1 are routed to the gamma = -1 branch.
GammaParam make_gamma(double gamma, double critical_band = 1e-6);

/// Dimensionless collapse time tau(gamma): sqrt(eta/2) B(alpha, 1/2),
/// or sqrt(pi/2) on the critical branch. Throws range_error if the value
/// is not representable instead of silently returning 0 or inf.
double collapse_time(const GammaParam& param);

/// A fully specified dimensionless collapse problem: r(0)=1, rdot(0)=0.
struct CollapseSolution {
    GammaParam param;
    double tau;

    explicit CollapseSolution(const GammaParam& p) : param(p), tau(collapse_time(p)) {}
    explicit CollapseSolution(double gamma, double critical_band = 1e-6)
        : CollapseSolution(make_gamma(gamma, critical_band)) {}
};

/// Radius r(t) on |t| <= tau, even in t, with r(0)=1 and r(+-tau)=0 exact.
/// Beta-quantile branch for gamma != -1, error-function branch at the
/// critical exponent. Throws domain_error outside [-tau, tau].
double evaluate_r(const CollapseSolution& sol, double t);

/// Inverse solution t(r) on the collapse branch, r in [0,1]; t(1)=0 exactly
/// and t(0)=tau.
double evaluate_t(const CollapseSolution& sol, double r);

/// Velocity from the integral of motion (not from differentiating the
/// quantile). Nonpositive for t in [0,tau]; -inf at t=tau when gamma <= -1.
double evaluate_rdot(const CollapseSolution& sol, double t);

/// Limit velocity at the collapse point: -sqrt(2/(1+gamma)) for
/// gamma > -1, -inf otherwise.
double rdot_at_collapse(const GammaParam& param);

/// Potential phi(r) = r^{1+gamma}/(1+gamma), or ln r at the critical
/// exponent; defined up to an additive constant, r > 0.
double potential(const GammaParam& param, double r);

/// Residual of the integral of motion at a state (r, rdot); zero on exact
/// trajectories.
double energy_residual(const GammaParam& param, double r, double rdot);

/// Instantaneous state along the solution: position, velocity, potential
/// and Lagrangian (kinetic minus potential).
struct EnergyState {
    double r;
    double rdot;
    double phi;
    double lagrangian;
};

EnergyState evaluate_state(const CollapseSolution& sol, double t);

/// The compact closed forms: sqrt(1-t^2), 1 - t^2/2, cos t, cn(t,1/2) for
/// gamma = -3, 0, 1, 3. Throws unsupported_error for other gamma.
double closed_form(double gamma, double t);

/// Periodic continuation past the collapse point for odd positive integer
/// gamma: reflections of the arc on [0,tau] with wavelength 4 tau,
/// r(0)=1, r(tau)=0, r(2tau)=-1, r(3tau)=0, r(4tau)=1.
double evaluate_extended(const CollapseSolution& sol, double t);

}  // namespace collapse
