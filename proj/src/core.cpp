#include "collapse/core.hpp"

#include "collapse/errors.hpp"
#include "collapse/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace collapse {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Quantile iteration budget for the solution path. Near the critical band
// alpha grows like 1/|1+gamma|; the reflected continued fraction still
// converges but can need more than the default budget.
const specfun::AccuracyPolicy kSolvePolicy{1e-14, 2000};

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

GammaParam make_gamma(double gamma, double critical_band) {
    if (!std::isfinite(gamma)) throw domain_error("make_gamma: gamma must be finite");
    GammaParam p;
    p.gamma = gamma;
    if (std::fabs(gamma + 1.0) < critical_band) {
        p.regime = Regime::Critical;
        p.eta = kInf;
        p.alpha = kInf;
        return p;
    }
    p.regime = gamma < -1.0 ? Regime::Subcritical : Regime::Supercritical;
    const double abs1pg = std::fabs(1.0 + gamma);
    p.eta = 1.0 / abs1pg;
    p.alpha = 0.25 + (3.0 - gamma) / (4.0 * abs1pg);
    return p;
}

double collapse_time(const GammaParam& param) {
    if (param.critical()) return std::sqrt(0.5 * kPi);
    const double lbeta = specfun::log_beta(param.alpha, 0.5);
    const double scale = std::sqrt(0.5 * param.eta);
    // Keep the exact expression sqrt(eta/2)*B so that evaluate_t(r=1)
    // reproduces tau bit-for-bit; fall back to log space only to detect
    // a non-representable result.
    const double tau = scale * std::exp(lbeta);
    if (!std::isfinite(tau) || tau == 0.0) {
        throw range_error("collapse_time: tau not representable for gamma=" +
                          std::to_string(param.gamma));
    }
    return tau;
}

double evaluate_r(const CollapseSolution& sol, double t) {
    const double at = std::fabs(t);
    if (at > sol.tau) {
        throw domain_error(
            "evaluate_r: |t| > tau (t=" + std::to_string(t) + ", tau=" + std::to_string(sol.tau) +
            "); use evaluate_extended for odd positive integer gamma");
    }
    if (t == 0.0) return 1.0;
    if (at == sol.tau) return 0.0;

    if (sol.param.critical()) {
        const double y = std::sqrt(2.0 / kPi) * at;
        if (y >= 1.0) return 0.0;
        const double x = specfun::inv_erf(y);
        return std::exp(-x * x);
    }

    const double p = 1.0 - at / sol.tau;
    const double q = specfun::inv_reg_inc_beta(p, sol.param.alpha, 0.5, kSolvePolicy);
    if (q == 0.0) return 0.0;
    if (q == 1.0) return 1.0;
    // r = q^eta as exp(eta ln q): eta can exceed 1e6 near the critical
    // band, where direct powering under/overflows prematurely.
    return std::exp(sol.param.eta * std::log(q));
}

double evaluate_t(const CollapseSolution& sol, double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw domain_error("evaluate_t: r outside [0,1]");
    if (r == 1.0) return 0.0;

    if (sol.param.critical()) {
        if (r == 0.0) return sol.tau;
        return sol.tau * specfun::erf(std::sqrt(-std::log(r)));
    }

    if (r == 0.0) return sol.tau;
    const double s = std::pow(r, std::fabs(1.0 + sol.param.gamma));
    const double scale = std::sqrt(0.5 * sol.param.eta);
    const double t = sol.tau - scale * specfun::inc_beta(s, sol.param.alpha, 0.5, kSolvePolicy);
    return t < 0.0 ? 0.0 : t;
}

double evaluate_rdot(const CollapseSolution& sol, double t) {
    const double at = std::fabs(t);
    if (at > sol.tau) throw domain_error("evaluate_rdot: |t| > tau");
    if (t == 0.0) return 0.0;

    const double r = evaluate_r(sol, t);
    const double g = sol.param.gamma;
    double speed;
    if (sol.param.critical()) {
        speed = r == 0.0 ? kInf : std::sqrt(std::max(0.0, -2.0 * std::log(r)));
    } else if (r == 0.0) {
        speed = g < -1.0 ? kInf : std::sqrt(2.0 / (1.0 + g));
    } else {
        speed = std::sqrt(std::max(0.0, 2.0 * (1.0 - std::pow(r, 1.0 + g)) / (1.0 + g)));
    }
    return -sgn(t) * speed;
}

double rdot_at_collapse(const GammaParam& param) {
    if (param.gamma > -1.0 && !param.critical()) return -std::sqrt(2.0 / (1.0 + param.gamma));
    return -kInf;
}

double potential(const GammaParam& param, double r) {
    if (!(r > 0.0)) throw domain_error("potential: requires r > 0");
    if (param.critical()) return std::log(r);
    return std::pow(r, 1.0 + param.gamma) / (1.0 + param.gamma);
}

double energy_residual(const GammaParam& param, double r, double rdot) {
    if (param.critical()) return rdot * rdot + 2.0 * std::log(r);
    const double g = param.gamma;
    return 0.5 * (1.0 + g) * rdot * rdot + std::pow(r, 1.0 + g) - 1.0;
}

EnergyState evaluate_state(const CollapseSolution& sol, double t) {
    EnergyState s;
    s.r = evaluate_r(sol, t);
    s.rdot = evaluate_rdot(sol, t);
    if (s.r == 0.0) {
        // collapse-point limit of the potential
        s.phi = sol.param.gamma > -1.0 && !sol.param.critical() ? 0.0 : -kInf;
    } else {
        s.phi = potential(sol.param, s.r);
    }
    s.lagrangian = 0.5 * s.rdot * s.rdot - s.phi;
    return s;
}

double closed_form(double gamma, double t) {
    if (gamma == -3.0) {
        if (std::fabs(t) > 1.0) throw domain_error("closed_form: |t| > tau(-3) = 1");
        return std::sqrt(1.0 - t * t);
    }
    if (gamma == 0.0) {
        const double tau0 = std::sqrt(2.0);
        if (std::fabs(t) > tau0) throw domain_error("closed_form: |t| > tau(0) = sqrt(2)");
        return 1.0 - 0.5 * t * t;
    }
    if (gamma == 1.0) return std::cos(t);
    if (gamma == 3.0) return specfun::jacobi_cn(t, 0.5);
    throw unsupported_error("closed_form: no compact solution for gamma=" + std::to_string(gamma) +
                            " (supported: -3, 0, 1, 3)");
}

double evaluate_extended(const CollapseSolution& sol, double t) {
    const double g = sol.param.gamma;
    const double rounded = std::round(g);
    const bool odd_positive =
        std::fabs(g - rounded) < 1e-9 && rounded >= 1.0 && std::fmod(rounded, 2.0) == 1.0;
    if (!odd_positive) {
        throw unsupported_error(
            "evaluate_extended: continuation requires odd positive integer gamma, got " +
            std::to_string(g));
    }
    const double tau = sol.tau;
    double u = std::fmod(std::fabs(t), 4.0 * tau);  // even in t, wavelength 4 tau
    if (u <= tau) return evaluate_r(sol, u);
    if (u <= 2.0 * tau) return -evaluate_r(sol, 2.0 * tau - u);
    if (u <= 3.0 * tau) return -evaluate_r(sol, u - 2.0 * tau);
    return evaluate_r(sol, 4.0 * tau - u);
}

}  // namespace collapse
