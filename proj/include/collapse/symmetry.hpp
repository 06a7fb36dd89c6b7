#pragma once

namespace collapse {

/// Image of a gamma value under the collapse-time point symmetry
/// (gamma, tau) -> (-2-gamma, pi/(2 tau)). Involutive.
struct TauSymmetryImage {
    double gamma_prime;
    double tau_prime;
};

TauSymmetryImage tau_symmetry(double gamma);

/// Image of a solution point under the substitution symmetry r -> r^delta
/// with delta = (1-gamma)/2:
///   gamma' = (gamma+3)/(gamma-1),  t' = t sqrt(delta),  r' = r^delta.
/// Involutive; restricted to gamma < 1 (positive delta).
struct GeneralSymmetryImage {
    double gamma_prime;
    double delta;
    double time_scale;  // sqrt(delta)
    double t_prime;
    double r_prime;
};

GeneralSymmetryImage general_symmetry(double gamma, double t, double r);

}  // namespace collapse
