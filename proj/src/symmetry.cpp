#include "collapse/symmetry.hpp"

#include "collapse/core.hpp"
#include "collapse/errors.hpp"

#include <cmath>
#include <string>

namespace collapse {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TauSymmetryImage tau_symmetry(double gamma) {
    const double tau = collapse_time(make_gamma(gamma));
    return TauSymmetryImage{-2.0 - gamma, 0.5 * kPi / tau};
}

GeneralSymmetryImage general_symmetry(double gamma, double t, double r) {
    if (!(gamma < 1.0)) {
        throw domain_error("general_symmetry: requires gamma < 1 (positive delta), got " +
                           std::to_string(gamma));
    }
    if (!(r > 0.0 && r <= 1.0)) throw domain_error("general_symmetry: requires r in (0,1]");
    GeneralSymmetryImage img;
    img.delta = 0.5 * (1.0 - gamma);
    img.gamma_prime = (gamma + 3.0) / (gamma - 1.0);
    img.time_scale = std::sqrt(img.delta);
    img.t_prime = t * img.time_scale;
    img.r_prime = std::pow(r, img.delta);
    return img;
}

}  // namespace collapse
