#include "collapse/refode.hpp"

#include "collapse/core.hpp"
#include "collapse/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace collapse {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Forward r(t) comparisons are meaningful only while dr = |rdot| * ulp(t)
// stays far below the validation tolerance; past this speed the tail is
// checked through the inverse map.
constexpr double kForwardVelocityCap = 1e5;

struct State {
    double r;
    double v;
};

State rhs(double gamma, const State& y) { return State{y.v, -std::pow(y.r, gamma)}; }

}  // namespace

SampleSeries integrate_reference(double gamma, const IntegratorConfig& config, double t_max) {
    if (!(config.rel_tol > 0.0) || !(config.abs_tol > 0.0))
        throw domain_error("integrate_reference: tolerances must be positive");
    if (!(config.r_floor > 0.0 && config.r_floor < 0.1))
        throw domain_error("integrate_reference: r_floor must lie in (0, 0.1)");

    // Dormand-Prince 5(4) tableau.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    SampleSeries series;
    series.source = SampleSource::Oracle;

    double t = 0.0;
    double t_comp = 0.0;  // Kahan carry: keeps t at one-ulp accuracy over many steps
    State y{1.0, 0.0};
    State k1 = rhs(gamma, y);
    series.points.push_back(Sample{0.0, 1.0, 0.0});

    double h = 1e-4;
    double facold = 1e-4;
    const double safe = 0.9, fac1 = 0.2, fac2 = 10.0, beta = 0.04;
    const double expo1 = 0.2 - beta * 0.75;
    bool terminated = false;

    for (long step = 0; step < config.max_steps; step++) {
        if (y.r <= config.r_floor || t >= t_max) {
            terminated = true;
            break;
        }
        if (!(h > 0.0) || t + h == t) {  // below the resolution of t
            terminated = true;
            break;
        }

        State k2, k3, k4, k5, k6, k7;
        {
            State w{y.r + h * a21 * k1.r, y.v + h * a21 * k1.v};
            k2 = rhs(gamma, w);
            w = {y.r + h * (a31 * k1.r + a32 * k2.r), y.v + h * (a31 * k1.v + a32 * k2.v)};
            k3 = rhs(gamma, w);
            w = {y.r + h * (a41 * k1.r + a42 * k2.r + a43 * k3.r),
                 y.v + h * (a41 * k1.v + a42 * k2.v + a43 * k3.v)};
            k4 = rhs(gamma, w);
            w = {y.r + h * (a51 * k1.r + a52 * k2.r + a53 * k3.r + a54 * k4.r),
                 y.v + h * (a51 * k1.v + a52 * k2.v + a53 * k3.v + a54 * k4.v)};
            k5 = rhs(gamma, w);
            w = {y.r + h * (a61 * k1.r + a62 * k2.r + a63 * k3.r + a64 * k4.r + a65 * k5.r),
                 y.v + h * (a61 * k1.v + a62 * k2.v + a63 * k3.v + a64 * k4.v + a65 * k5.v)};
            k6 = rhs(gamma, w);
        }
        State ynew{y.r + h * (b1 * k1.r + b3 * k3.r + b4 * k4.r + b5 * k5.r + b6 * k6.r),
                   y.v + h * (b1 * k1.v + b3 * k3.v + b4 * k4.v + b5 * k5.v + b6 * k6.v)};

        // The solution must stay positive for fractional gamma; reject
        // steps that overshoot below zero.
        bool reject_overshoot = ynew.r <= 0.0;
        double err = 2.0;
        if (!reject_overshoot) {
            k7 = rhs(gamma, ynew);
            const double err_r =
                h * (e1 * k1.r + e3 * k3.r + e4 * k4.r + e5 * k5.r + e6 * k6.r + e7 * k7.r);
            const double err_v =
                h * (e1 * k1.v + e3 * k3.v + e4 * k4.v + e5 * k5.v + e6 * k6.v + e7 * k7.v);
            const double sc_r =
                config.abs_tol + config.rel_tol * std::max(std::fabs(y.r), std::fabs(ynew.r));
            const double sc_v =
                config.abs_tol + config.rel_tol * std::max(std::fabs(y.v), std::fabs(ynew.v));
            const double qr = err_r / sc_r, qv = err_v / sc_v;
            err = std::sqrt(0.5 * (qr * qr + qv * qv));
        }

        if (err <= 1.0) {
            // accept: compensated advance of t
            const double dt = h + t_comp;
            const double tnew = t + dt;
            t_comp = dt - (tnew - t);
            t = tnew;
            y = ynew;
            k1 = k7;  // FSAL
            if (t > series.points.back().t) series.points.push_back(Sample{t, y.r, y.v});

            const double fac11 = std::pow(std::max(err, 1e-16), expo1);
            double fac = fac11 / std::pow(facold, beta);
            fac = std::max(1.0 / fac2, std::min(1.0 / fac1, fac / safe));
            h = h / fac;
            facold = std::max(err, 1e-4);
        } else {
            const double fac11 = std::pow(err, expo1);
            h = h / std::min(1.0 / fac1, fac11 / safe);
            if (!(h > 1e-300)) {
                throw convergence_error("integrate_reference: step size underflow at t=" +
                                        std::to_string(t) + " for gamma=" + std::to_string(gamma));
            }
        }
    }

    if (!terminated) {
        throw convergence_error("integrate_reference: max_steps exhausted for gamma=" +
                                std::to_string(gamma));
    }
    return series;
}

ParametricSample parametric_tophat(double theta) {
    if (!(std::fabs(theta) <= kPi)) throw domain_error("parametric_tophat: |theta| > pi");
    ParametricSample s;
    s.theta = theta;
    s.t = (theta + std::sin(theta)) / std::sqrt(8.0);
    s.r = 0.5 * (1.0 + std::cos(theta));
    return s;
}

ValidationReport validate_explicit(double gamma, int n_grid, const IntegratorConfig& config) {
    if (n_grid < 10) throw domain_error("validate_explicit: n_grid must be >= 10");

    const CollapseSolution sol(gamma);
    const SampleSeries oracle = integrate_reference(gamma, config, 1.2 * sol.tau);

    ValidationReport rep;
    rep.gamma = gamma;

    // Subsample the accepted steps down to roughly n_grid points.
    const size_t n = oracle.points.size();
    const size_t stride = std::max<size_t>(1, n / static_cast<size_t>(n_grid));

    double sum_sq = 0.0;
    for (size_t i = 0; i < n; i += stride) {
        const Sample& s = oracle.points[i];
        if (s.r < config.r_floor || s.t > sol.tau) continue;

        const double eres = energy_residual(sol.param, s.r, s.rdot);
        const double escale = std::max(1.0, std::fabs(std::pow(s.r, 1.0 + gamma)));
        rep.energy_max_resid = std::max(rep.energy_max_resid, std::fabs(eres) / escale);

        if (std::fabs(s.rdot) <= kForwardVelocityCap) {
            const double err = std::fabs(evaluate_r(sol, s.t) - s.r);
            rep.max_abs_err = std::max(rep.max_abs_err, err);
            sum_sq += err * err;
            rep.grid_size++;
            rep.t_cover_hi = s.t;
        } else {
            const double terr = std::fabs(evaluate_t(sol, s.r) - s.t);
            rep.tail_max_t_err = std::max(rep.tail_max_t_err, terr);
            rep.tail_points++;
        }
    }
    if (rep.grid_size > 0) rep.rms_err = std::sqrt(sum_sq / rep.grid_size);
    return rep;
}

}  // namespace collapse
