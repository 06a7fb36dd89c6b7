#include "collapse/approx.hpp"

#include "collapse/core.hpp"
#include "collapse/errors.hpp"
#include "collapse/specfun.hpp"

#include <cmath>
#include <string>

namespace collapse {

ApproxShape parse_shape(const std::string& name) {
    if (name == "p1" || name == "P1") return ApproxShape::P1;
    if (name == "p2" || name == "P2") return ApproxShape::P2;
    if (name == "q1" || name == "Q1") return ApproxShape::Q1;
    if (name == "q2" || name == "Q2") return ApproxShape::Q2;
    throw unsupported_error("unknown shape '" + name + "' (expected p1, p2, q1 or q2)");
}

const char* to_string(ApproxShape s) {
    switch (s) {
        case ApproxShape::P1: return "p1";
        case ApproxShape::P2: return "p2";
        case ApproxShape::Q1: return "q1";
        case ApproxShape::Q2: return "q2";
    }
    return "?";
}

ApproxSpec resolve_shape(double gamma, ApproxShape shape) {
    const GammaParam param = make_gamma(gamma);
    const double tau = collapse_time(param);
    const bool power_law = gamma <= -1.0;

    ApproxSpec spec;
    spec.gamma = gamma;
    spec.shape = shape;
    spec.tau = tau;
    spec.branch = power_law ? ApproxBranch::PowerLaw : ApproxBranch::TwoTerm;

    switch (shape) {
        case ApproxShape::P1:
            if (!(gamma < -1.0))
                throw unsupported_error("shape p1 requires gamma strictly below -1");
            spec.value = 2.0 / (1.0 - gamma);
            break;
        case ApproxShape::P2:
            if (!power_law) throw unsupported_error("shape p2 requires gamma <= -1");
            spec.value = 0.5 * tau * tau;
            break;
        case ApproxShape::Q1:
            if (power_law) throw unsupported_error("shape q1 requires gamma > -1");
            spec.value = param.eta * specfun::beta_complete(param.eta, 0.5);
            break;
        case ApproxShape::Q2:
            if (power_law) throw unsupported_error("shape q2 requires gamma > -1");
            spec.value = tau * tau / (tau * tau - 1.0);
            break;
    }
    return spec;
}

double evaluate_approx(const ApproxSpec& spec, double t) {
    const double ax = std::fabs(t) / spec.tau;
    if (ax > 1.0) throw domain_error("evaluate_approx: |t| > tau");
    if (spec.branch == ApproxBranch::PowerLaw) {
        const double base = (1.0 - ax) * (1.0 + ax);
        return base <= 0.0 ? 0.0 : std::pow(base, spec.value);
    }
    const double q = spec.value;
    const double u = 1.0 - ax;
    return q * u - (q - 1.0) * std::pow(u, q / (q - 1.0));
}

ApproxErrorReport approx_error_report(double gamma, ApproxShape shape, int n_grid) {
    if (n_grid < 2) throw domain_error("approx_error_report: n_grid must be >= 2");
    const ApproxSpec spec = resolve_shape(gamma, shape);
    const CollapseSolution sol(gamma);

    double max_err = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n_grid; i++) {
        const double t = spec.tau * (static_cast<double>(i) / (n_grid - 1));
        const double err = std::fabs(evaluate_approx(spec, t) - evaluate_r(sol, t));
        max_err = std::max(max_err, err);
        sum_sq += err * err;
    }
    return ApproxErrorReport{gamma, shape, n_grid, max_err, std::sqrt(sum_sq / n_grid)};
}

}  // namespace collapse
