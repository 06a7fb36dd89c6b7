#pragma once

#include "collapse/sample.hpp"

#include <map>
#include <string>
#include <vector>

namespace collapse {

/// The catalogued physical systems, one per table row.
enum class ScenarioKind {
    CavitationBubble,
    BubbleNDim,
    TopHatCollapse,
    TwoBodyCollision,
    PowerLawPotentialFall,
    LogPotentialFall,
    UniformFieldFall,
    DipoleAcceleration,
    RelativisticOrbitalDecay,
    HarmonicOscillator,
    Polytrope,
};

ScenarioKind parse_scenario_kind(const std::string& name);
const char* to_string(ScenarioKind k);

/// A dimensional problem mapped onto the dimensionless collapse equation:
/// gamma, the scale R0, the natural time constant T0 and the force
/// constant k, with k R0^{gamma-1} T0^2 = 1 by construction. All inputs
/// are SI by convention. For the polytrope, R and T carry non-standard
/// meanings, recorded in the role strings.
struct PhysicalScenario {
    ScenarioKind kind;
    std::map<std::string, double> params;  // resolved inputs, defaults included
    double gamma;
    double R0;
    double T0;
    double k;
    std::string r_role;  // what R measures, with unit
    std::string t_role;  // what T measures, with unit
    std::vector<std::string> warnings;
};

/// Build a scenario from named parameters. Unknown names, missing required
/// names or nonpositive values raise domain_error. Optional constants
/// default to CODATA values (G, ke, c) or to 1 (R0 where the time scale is
/// R0-independent).
PhysicalScenario build_scenario(ScenarioKind kind, const std::map<std::string, double>& params);

/// Physical collapse time T_c = tau(gamma) * T0.
double physical_collapse_time(const PhysicalScenario& sc);

/// A dimensional (T, R) pair. Rdot in units of R0/T0.
struct DimensionalSample {
    double T;
    double R;
    double Rdot;
};

struct DimensionalSeries {
    SampleSource source;
    std::vector<DimensionalSample> points;
};

/// Rescale a dimensionless series: T = T0 t, R = R0 r, Rdot = (R0/T0) rdot.
DimensionalSeries to_physical(const PhysicalScenario& sc, const SampleSeries& series);

/// The force constant after the substitution symmetry, k' = k delta
/// R0^{1+gamma} with delta = (1-gamma)/2; requires gamma < 1.
double transform_k(const PhysicalScenario& sc);

}  // namespace collapse
