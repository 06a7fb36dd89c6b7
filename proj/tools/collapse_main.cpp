// collapse: exact explicit solutions of rddot = -r^gamma via the beta
// quantile, with ODE validation, polynomial approximations and a catalog
// of dimensional scenarios.
//
// Subcommands: tau, solve, invert, approx, validate, scenario.
// Exit codes: 0 success, 2 usage/domain error, 3 unsupported combination,
// 4 convergence failure.

#include "collapse/approx.hpp"
#include "collapse/core.hpp"
#include "collapse/errors.hpp"
#include "collapse/refode.hpp"
#include "collapse/scenarios.hpp"
#include "collapse/series.hpp"
#include "collapse/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

// 17 significant digits round-trip doubles exactly; infinities print as
// the uppercase INF marker so downstream parsers never see a silent
// sentinel number.
std::string fmt(double x) {
    if (std::isinf(x)) return x > 0 ? "INF" : "-INF";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json json_number(double x) {
    if (std::isinf(x)) return x > 0 ? json("INF") : json("-INF");
    return json(x);
}

struct SolveOptions {
    double gamma = 0.0;
    int n = 100;
    std::string format = "csv";
    std::vector<std::string> include;
    std::string shape;
};

collapse::ApproxShape default_shape(double gamma) {
    // p2/q2 are defined across their whole regime (p1 is not at gamma=-1)
    return gamma <= -1.0 ? collapse::ApproxShape::P2 : collapse::ApproxShape::Q2;
}

void emit_csv_series(const collapse::SampleSeries& series) {
    for (const auto& s : series.points) {
        std::printf("%s,%s,%s,%s\n", fmt(s.t).c_str(), fmt(s.r).c_str(), fmt(s.rdot).c_str(),
                    collapse::to_string(series.source));
    }
}

json json_series(const collapse::SampleSeries& series) {
    json arr = json::array();
    for (const auto& s : series.points) {
        arr.push_back({{"t", s.t},
                       {"r", s.r},
                       {"rdot", json_number(s.rdot)},
                       {"source", collapse::to_string(series.source)}});
    }
    return arr;
}

int run_tau(double gamma) {
    const collapse::GammaParam param = collapse::make_gamma(gamma);
    const double tau = collapse::collapse_time(param);
    const char* regime = param.regime == collapse::Regime::Critical ? "critical"
                         : param.regime == collapse::Regime::Subcritical ? "subcritical"
                                                                         : "supercritical";
    std::printf("gamma = %s\n", fmt(gamma).c_str());
    std::printf("regime = %s\n", regime);
    std::printf("eta = %s\n", fmt(param.eta).c_str());
    std::printf("alpha = %s\n", fmt(param.alpha).c_str());
    std::printf("tau = %s\n", fmt(tau).c_str());
    std::printf("rdot_tau = %s\n", fmt(collapse::rdot_at_collapse(param)).c_str());
    return 0;
}

int run_solve(const SolveOptions& opt) {
    const collapse::CollapseSolution sol(opt.gamma);

    bool with_oracle = false, with_approx = false, with_parametric = false;
    for (const auto& inc : opt.include) {
        if (inc == "oracle") with_oracle = true;
        else if (inc == "approx") with_approx = true;
        else if (inc == "parametric") with_parametric = true;
        else throw collapse::domain_error("unknown --include value '" + inc + "'");
    }
    if (with_parametric && opt.gamma != -2.0) {
        throw collapse::unsupported_error("parametric overlay exists only for gamma = -2");
    }

    std::vector<collapse::SampleSeries> blocks;
    blocks.push_back(collapse::sample_explicit(sol, opt.n));
    if (with_oracle) {
        collapse::SampleSeries oracle =
            collapse::integrate_reference(opt.gamma, {}, 1.2 * sol.tau);
        blocks.push_back(std::move(oracle));
    }
    if (with_approx) {
        const collapse::ApproxShape shape =
            opt.shape.empty() ? default_shape(opt.gamma) : collapse::parse_shape(opt.shape);
        blocks.push_back(collapse::sample_approx(collapse::resolve_shape(opt.gamma, shape), opt.n));
    }
    if (with_parametric) blocks.push_back(collapse::sample_parametric(opt.n));

    if (opt.format == "csv") {
        std::printf("t,r,rdot,source\n");
        for (const auto& b : blocks) emit_csv_series(b);
    } else {
        json out = {{"gamma", opt.gamma}, {"tau", sol.tau}};
        json samples = json::array();
        for (const auto& b : blocks) {
            for (auto& item : json_series(b)) samples.push_back(std::move(item));
        }
        out["samples"] = std::move(samples);
        std::printf("%s\n", out.dump().c_str());
    }
    return 0;
}

int run_invert(double gamma, double r) {
    const collapse::CollapseSolution sol(gamma);
    std::printf("t = %s\n", fmt(collapse::evaluate_t(sol, r)).c_str());
    return 0;
}

int run_approx(double gamma, const std::string& shape_name, int n, const std::string& format,
               bool report) {
    const collapse::ApproxShape shape =
        shape_name.empty() ? default_shape(gamma) : collapse::parse_shape(shape_name);
    if (report) {
        const collapse::ApproxErrorReport rep = collapse::approx_error_report(gamma, shape, n);
        json out = {{"gamma", rep.gamma},
                    {"shape", collapse::to_string(rep.shape)},
                    {"n_grid", rep.n_grid},
                    {"max_abs_err", rep.max_abs_err},
                    {"rms_err", rep.rms_err}};
        std::printf("%s\n", out.dump().c_str());
        return 0;
    }
    const collapse::ApproxSpec spec = collapse::resolve_shape(gamma, shape);
    const collapse::SampleSeries series = collapse::sample_approx(spec, n);
    if (format == "csv") {
        std::printf("t,r,rdot,source\n");
        emit_csv_series(series);
    } else {
        json out = {{"gamma", gamma},
                    {"tau", spec.tau},
                    {"shape", collapse::to_string(spec.shape)},
                    {"value", spec.value},
                    {"samples", json_series(series)}};
        std::printf("%s\n", out.dump().c_str());
    }
    return 0;
}

int run_validate(double gamma, int n) {
    const collapse::ValidationReport rep = collapse::validate_explicit(gamma, n, {});
    json out = {{"gamma", rep.gamma},
                {"grid_size", rep.grid_size},
                {"max_abs_err", rep.max_abs_err},
                {"rms_err", rep.rms_err},
                {"energy_max_resid", rep.energy_max_resid},
                {"t_range_covered", {rep.t_cover_lo, rep.t_cover_hi}},
                {"tail_points", rep.tail_points},
                {"tail_max_t_err", rep.tail_max_t_err}};
    // gamma = 3 admits an additional closed-form cross-check against cn
    if (gamma == 3.0) {
        const collapse::CollapseSolution sol(gamma);
        double cn_err = 0.0;
        for (int i = 0; i <= 200; i++) {
            const double t = sol.tau * (static_cast<double>(i) / 200);
            cn_err = std::max(cn_err, std::fabs(collapse::evaluate_r(sol, t) -
                                                collapse::closed_form(3.0, t)));
        }
        out["cn_cross_check_max_err"] = cn_err;
    }
    std::printf("%s\n", out.dump().c_str());
    const bool pass = rep.max_abs_err <= 1e-6 && rep.tail_max_t_err <= 1e-6;
    return pass ? 0 : 4;
}

int run_scenario(const std::string& kind_name, const std::vector<std::string>& kv, int n,
                 const std::string& format) {
    const collapse::ScenarioKind kind = collapse::parse_scenario_kind(kind_name);
    std::map<std::string, double> params;
    for (const auto& pair : kv) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw collapse::domain_error("scenario parameters must be key=value, got '" + pair +
                                         "'");
        }
        size_t pos = 0;
        const std::string key = pair.substr(0, eq);
        const std::string val = pair.substr(eq + 1);
        double parsed;
        try {
            parsed = std::stod(val, &pos);
        } catch (const std::exception&) {
            throw collapse::domain_error("scenario parameter '" + key + "': bad number '" + val +
                                         "'");
        }
        if (pos != val.size()) {
            throw collapse::domain_error("scenario parameter '" + key + "': bad number '" + val +
                                         "'");
        }
        params[key] = parsed;
    }

    const collapse::PhysicalScenario sc = collapse::build_scenario(kind, params);
    const collapse::CollapseSolution sol(sc.gamma);
    const double Tc = collapse::physical_collapse_time(sc);
    const collapse::DimensionalSeries series =
        collapse::to_physical(sc, collapse::sample_explicit(sol, n));

    for (const auto& w : sc.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());

    if (format == "csv") {
        std::printf("# kind = %s\n", collapse::to_string(sc.kind));
        for (const auto& [key, value] : sc.params) {
            std::printf("# %s = %s\n", key.c_str(), fmt(value).c_str());
        }
        std::printf("# gamma = %s\n", fmt(sc.gamma).c_str());
        std::printf("# k = %s\n", fmt(sc.k).c_str());
        std::printf("# R0 = %s\n", fmt(sc.R0).c_str());
        std::printf("# T0 = %s\n", fmt(sc.T0).c_str());
        std::printf("# Tc = %s\n", fmt(Tc).c_str());
        std::printf("# R is %s; T is %s\n", sc.r_role.c_str(), sc.t_role.c_str());
        std::printf("T,R,Rdot,source\n");
        for (const auto& s : series.points) {
            std::printf("%s,%s,%s,%s\n", fmt(s.T).c_str(), fmt(s.R).c_str(), fmt(s.Rdot).c_str(),
                        collapse::to_string(series.source));
        }
    } else {
        json jparams = json::object();
        for (const auto& [key, value] : sc.params) jparams[key] = value;
        json samples = json::array();
        for (const auto& s : series.points) {
            samples.push_back({{"T", s.T}, {"R", s.R}, {"Rdot", json_number(s.Rdot)}});
        }
        json out = {{"kind", collapse::to_string(sc.kind)},
                    {"params", std::move(jparams)},
                    {"gamma", sc.gamma},
                    {"k", sc.k},
                    {"R0", sc.R0},
                    {"T0", sc.T0},
                    {"Tc", Tc},
                    {"r_role", sc.r_role},
                    {"t_role", sc.t_role},
                    {"samples", std::move(samples)}};
        std::printf("%s\n", out.dump().c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit solutions of the spherical collapse equation rddot = -k R^gamma"};
    app.require_subcommand(1);

    double gamma = 0.0;
    double r_value = 1.0;
    SolveOptions solve_opt;
    int n = 100;
    std::string format = "csv";
    std::string shape;
    bool report = false;
    std::string scenario_kind;
    std::vector<std::string> scenario_params;

    auto* tau_cmd = app.add_subcommand("tau", "Collapse time and derived constants for gamma");
    tau_cmd->add_option("--gamma", gamma, "control exponent")->required();

    auto* solve_cmd = app.add_subcommand("solve", "Sample the explicit solution r(t) on [0, tau]");
    solve_cmd->add_option("--gamma", solve_opt.gamma, "control exponent")->required();
    solve_cmd->add_option("--n", solve_opt.n, "number of samples")->check(CLI::Range(2, 100000000));
    solve_cmd->add_option("--format", solve_opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    solve_cmd->add_option("--include", solve_opt.include,
                          "overlay series: oracle, approx, parametric");
    solve_cmd->add_option("--shape", solve_opt.shape, "approx shape: p1, p2, q1, q2");

    auto* invert_cmd = app.add_subcommand("invert", "Inverse solution t(r)");
    invert_cmd->add_option("--gamma", gamma, "control exponent")->required();
    invert_cmd->add_option("--r", r_value, "radius in [0,1]")->required();

    auto* approx_cmd = app.add_subcommand("approx", "Polynomial approximation of r(t)");
    approx_cmd->add_option("--gamma", gamma, "control exponent")->required();
    approx_cmd->add_option("--shape", shape, "p1, p2, q1 or q2 (default p2/q2 by regime)");
    approx_cmd->add_option("--n", n, "number of samples / grid size")
        ->check(CLI::Range(2, 100000000));
    approx_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    approx_cmd->add_flag("--report", report, "print max/RMS error vs the exact solution as JSON");

    auto* validate_cmd =
        app.add_subcommand("validate", "Compare the explicit solution against the RK oracle");
    validate_cmd->add_option("--gamma", gamma, "control exponent")->required();
    validate_cmd->add_option("--n", n, "comparison grid size")->check(CLI::Range(10, 10000000));

    auto* scenario_cmd =
        app.add_subcommand("scenario", "Dimensional solution for a catalogued physical system");
    scenario_cmd->add_option("kind", scenario_kind, "scenario kind")->required();
    scenario_cmd->add_option("params", scenario_params, "key=value parameters");
    scenario_cmd->add_option("--n", n, "number of samples")->check(CLI::Range(2, 100000000));
    scenario_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (tau_cmd->parsed()) return run_tau(gamma);
        if (solve_cmd->parsed()) return run_solve(solve_opt);
        if (invert_cmd->parsed()) return run_invert(gamma, r_value);
        if (approx_cmd->parsed()) return run_approx(gamma, shape, n, format, report);
        if (validate_cmd->parsed()) return run_validate(gamma, n);
        if (scenario_cmd->parsed()) return run_scenario(scenario_kind, scenario_params, n, format);
    } catch (const collapse::unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const collapse::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
