#include "collapse/scenarios.hpp"

#include "collapse/core.hpp"
#include "collapse/errors.hpp"

#include <cmath>
#include <set>
#include <string>

namespace collapse {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kGravitationalConstant = 6.67430e-11;   // m^3 kg^-1 s^-2
constexpr double kCoulombConstant = 8.9875517923e9;      // N m^2 C^-2
constexpr double kSpeedOfLight = 2.99792458e8;           // m s^-1

class ParamReader {
  public:
    ParamReader(ScenarioKind kind, const std::map<std::string, double>& params)
        : kind_(kind), params_(params) {}

    double require(const std::string& name, bool positive = true) {
        auto it = params_.find(name);
        if (it == params_.end()) {
            throw domain_error(std::string(to_string(kind_)) + ": missing parameter '" + name +
                               "'");
        }
        check(name, it->second, positive);
        used_.insert(name);
        return it->second;
    }

    double optional(const std::string& name, double default_value, bool positive = true) {
        auto it = params_.find(name);
        used_.insert(name);
        if (it == params_.end()) return default_value;
        check(name, it->second, positive);
        return it->second;
    }

    void finish() const {
        for (const auto& [name, value] : params_) {
            if (!used_.count(name)) {
                throw domain_error(std::string(to_string(kind_)) + ": unknown parameter '" + name +
                                   "'");
            }
        }
    }

  private:
    void check(const std::string& name, double value, bool positive) const {
        if (!std::isfinite(value) || (positive && !(value > 0.0))) {
            throw domain_error(std::string(to_string(kind_)) + ": parameter '" + name +
                               "' must be positive and finite, got " + std::to_string(value));
        }
    }

    ScenarioKind kind_;
    const std::map<std::string, double>& params_;
    std::set<std::string> used_;
};

}  // namespace

ScenarioKind parse_scenario_kind(const std::string& name) {
    if (name == "cavitation") return ScenarioKind::CavitationBubble;
    if (name == "bubble_ndim") return ScenarioKind::BubbleNDim;
    if (name == "tophat") return ScenarioKind::TopHatCollapse;
    if (name == "twobody") return ScenarioKind::TwoBodyCollision;
    if (name == "powerlaw") return ScenarioKind::PowerLawPotentialFall;
    if (name == "logpotential") return ScenarioKind::LogPotentialFall;
    if (name == "uniform") return ScenarioKind::UniformFieldFall;
    if (name == "dipole") return ScenarioKind::DipoleAcceleration;
    if (name == "orbital_decay") return ScenarioKind::RelativisticOrbitalDecay;
    if (name == "oscillator") return ScenarioKind::HarmonicOscillator;
    if (name == "polytrope") return ScenarioKind::Polytrope;
    throw domain_error("unknown scenario kind '" + name + "'");
}

const char* to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::CavitationBubble: return "cavitation";
        case ScenarioKind::BubbleNDim: return "bubble_ndim";
        case ScenarioKind::TopHatCollapse: return "tophat";
        case ScenarioKind::TwoBodyCollision: return "twobody";
        case ScenarioKind::PowerLawPotentialFall: return "powerlaw";
        case ScenarioKind::LogPotentialFall: return "logpotential";
        case ScenarioKind::UniformFieldFall: return "uniform";
        case ScenarioKind::DipoleAcceleration: return "dipole";
        case ScenarioKind::RelativisticOrbitalDecay: return "orbital_decay";
        case ScenarioKind::HarmonicOscillator: return "oscillator";
        case ScenarioKind::Polytrope: return "polytrope";
    }
    return "?";
}

PhysicalScenario build_scenario(ScenarioKind kind, const std::map<std::string, double>& params) {
    ParamReader in(kind, params);
    PhysicalScenario sc;
    sc.kind = kind;
    sc.r_role = "position [m]";
    sc.t_role = "time [s]";

    switch (kind) {
        case ScenarioKind::CavitationBubble: {
            const double R0 = in.require("R0");
            const double rho = in.require("rho");
            const double dp = in.require("dp");
            sc.gamma = -4.0;
            sc.R0 = R0;
            sc.T0 = R0 * std::sqrt(rho / dp);
            sc.r_role = "bubble radius [m]";
            sc.params = {{"R0", R0}, {"rho", rho}, {"dp", dp}};
            break;
        }
        case ScenarioKind::BubbleNDim: {
            const double R0 = in.require("R0");
            const double rho = in.require("rho");
            const double dp = in.require("dp");
            const double N = in.require("N");
            if (!(N >= 3.0) || N != std::floor(N)) {
                throw domain_error("bubble_ndim: N must be an integer >= 3");
            }
            sc.gamma = -N - 1.0;
            sc.R0 = R0;
            sc.T0 = R0 * std::sqrt(rho / dp) / std::sqrt(N - 2.0);
            sc.r_role = "bubble radius [m]";
            sc.params = {{"R0", R0}, {"rho", rho}, {"dp", dp}, {"N", N}};
            break;
        }
        case ScenarioKind::TopHatCollapse: {
            const double rho0 = in.require("rho0");
            const double G = in.optional("G", kGravitationalConstant);
            const double R0 = in.optional("R0", 1.0);
            sc.gamma = -2.0;
            sc.R0 = R0;
            sc.T0 = std::sqrt(3.0 / (4.0 * kPi * G * rho0));
            sc.r_role = "sphere radius [m]";
            sc.params = {{"rho0", rho0}, {"G", G}, {"R0", R0}};
            break;
        }
        case ScenarioKind::TwoBodyCollision: {
            const double R0 = in.require("R0");
            const double M1 = in.require("M1");
            const double M2 = in.require("M2");
            const double G = in.optional("G", kGravitationalConstant);
            sc.gamma = -2.0;
            sc.R0 = R0;
            sc.T0 = std::pow(R0, 1.5) / std::sqrt(G * (M1 + M2));
            sc.r_role = "separation [m]";
            sc.params = {{"R0", R0}, {"M1", M1}, {"M2", M2}, {"G", G}};
            break;
        }
        case ScenarioKind::PowerLawPotentialFall: {
            const double R0 = in.require("R0");
            const double L = in.require("L");
            const double V = in.require("V");
            const double alpha = in.require("alpha", /*positive=*/false);
            if (alpha == 0.0) {
                throw domain_error("powerlaw: alpha must be nonzero (use logpotential)");
            }
            sc.gamma = alpha - 1.0;
            sc.R0 = R0;
            sc.T0 = std::sqrt(std::pow(L / R0, alpha) / std::fabs(alpha)) * R0 / V;
            sc.r_role = "distance from centre [m]";
            sc.params = {{"R0", R0}, {"L", L}, {"V", V}, {"alpha", alpha}};
            break;
        }
        case ScenarioKind::LogPotentialFall: {
            const double R0 = in.require("R0");
            const double V = in.require("V");
            sc.gamma = -1.0;
            sc.R0 = R0;
            sc.T0 = R0 / V;
            sc.r_role = "distance from centre [m]";
            sc.params = {{"R0", R0}, {"V", V}};
            break;
        }
        case ScenarioKind::UniformFieldFall: {
            const double R0 = in.require("R0");
            const double g = in.require("g");
            sc.gamma = 0.0;
            sc.R0 = R0;
            sc.T0 = std::sqrt(R0 / g);
            sc.r_role = "height above ground [m]";
            sc.params = {{"R0", R0}, {"g", g}};
            break;
        }
        case ScenarioKind::DipoleAcceleration: {
            const double R0 = in.require("R0");
            const double M = in.require("M");
            const double Q = in.require("Q");
            const double q = in.require("q");
            const double eps = in.require("eps");
            const double ke = in.optional("ke", kCoulombConstant);
            sc.gamma = -3.0;
            sc.R0 = R0;
            sc.T0 = std::sqrt(M * std::pow(R0, 4) / (4.0 * eps * ke * Q * q));
            sc.r_role = "distance from dipole centre [m]";
            if (eps > 0.01 * R0) {
                sc.warnings.push_back(
                    "dipole approximation assumes eps << R; eps exceeds 0.01*R0");
            }
            sc.params = {{"R0", R0}, {"M", M}, {"Q", Q}, {"q", q}, {"eps", eps}, {"ke", ke}};
            break;
        }
        case ScenarioKind::RelativisticOrbitalDecay: {
            const double R0 = in.require("R0");
            const double M1 = in.require("M1");
            const double M2 = in.require("M2");
            const double G = in.optional("G", kGravitationalConstant);
            const double c = in.optional("c", kSpeedOfLight);
            sc.gamma = -7.0;
            sc.R0 = R0;
            sc.T0 = 5.0 * std::pow(c, 5) * std::pow(R0, 4) /
                    (64.0 * std::sqrt(3.0) * std::pow(G, 3) * M1 * M2 * (M1 + M2));
            sc.r_role = "orbital separation [m]";
            sc.params = {{"R0", R0}, {"M1", M1}, {"M2", M2}, {"G", G}, {"c", c}};
            break;
        }
        case ScenarioKind::HarmonicOscillator: {
            const double R0 = in.optional("R0", 1.0);
            const double M = in.require("M");
            const double K = in.require("K");
            sc.gamma = 1.0;
            sc.R0 = R0;
            sc.T0 = std::sqrt(M / K);
            sc.r_role = "displacement from equilibrium [m]";
            sc.params = {{"R0", R0}, {"M", M}, {"K", K}};
            break;
        }
        case ScenarioKind::Polytrope: {
            // Static profile: R plays the role of rho^(1/n) and T of the
            // distance from the centre of mass; the math path is unchanged.
            const double R0 = in.require("R0");
            const double K = in.require("K");
            const double n = in.require("n");
            const double G = in.optional("G", kGravitationalConstant);
            sc.gamma = n;
            sc.R0 = R0;
            sc.T0 = std::sqrt((1.0 + n) * K * std::pow(R0, 1.0 - n) / (4.0 * kPi * G));
            sc.r_role = "density^(1/n) [(kg m^-3)^(1/n)]";
            sc.t_role = "distance from centre of mass [m]";
            sc.params = {{"R0", R0}, {"K", K}, {"n", n}, {"G", G}};
            break;
        }
    }
    in.finish();

    // Back-solve the force constant from T0 = sqrt(k^-1 R0^{1-gamma}).
    sc.k = std::pow(sc.R0, 1.0 - sc.gamma) / (sc.T0 * sc.T0);
    return sc;
}

double physical_collapse_time(const PhysicalScenario& sc) {
    return collapse_time(make_gamma(sc.gamma)) * sc.T0;
}

DimensionalSeries to_physical(const PhysicalScenario& sc, const SampleSeries& series) {
    DimensionalSeries out;
    out.source = series.source;
    out.points.reserve(series.points.size());
    const double vscale = sc.R0 / sc.T0;
    for (const Sample& s : series.points) {
        out.points.push_back(DimensionalSample{sc.T0 * s.t, sc.R0 * s.r, vscale * s.rdot});
    }
    return out;
}

double transform_k(const PhysicalScenario& sc) {
    if (!(sc.gamma < 1.0)) {
        throw domain_error("transform_k: substitution symmetry requires gamma < 1");
    }
    const double delta = 0.5 * (1.0 - sc.gamma);
    return sc.k * delta * std::pow(sc.R0, 1.0 + sc.gamma);
}

}  // namespace collapse
