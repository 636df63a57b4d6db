#include "diracsea/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "diracsea/errors.hpp"
#include "diracsea/exact.hpp"
#include "diracsea/oracle.hpp"
#include "diracsea/parallel.hpp"
#include "diracsea/perturb.hpp"
#include "diracsea/verify.hpp"

namespace diracsea::cli {

namespace {

const char* const kModeHeader =
    "lambda,p,E,eps_exact,eps_oracle,eps0,eps1,eps2,delta_exact,delta_pert,residual,norm_drift";
const char* const kVacuumHeader = "p,weight,integrand,pair_pert,pair_exact";

std::string mode_row(const ModeIndex& mode, const RunConfig& cfg)
{
    const auto& pp = cfg.params;
    const auto b = energy_breakdown(mode, pp, cfg.t1);
    OdeReport rep;
    const auto run = OdeRun::seeded(pp, cfg.t1, cfg.seed_threshold);
    const double oracle = mode_energy(evolve_ode(mode, pp, run, &rep), pp);

    std::string row = std::to_string(mode.lambda);
    for (double v : {mode.p, dispersion(mode.p, pp.m), b.exact, oracle, b.eps0, b.eps1, b.eps2, b.exact - b.eps0,
                     b.delta_pert, b.residual, rep.norm_drift})
        row += ',' + csv_number(v);
    return row;
}

std::string escape(std::string s)
{
    for (char& ch : s)
        if (ch == '\n' || ch == '\r')
            ch = ' ';
        else if (ch == '"')
            ch = '\'';
    return s;
}

int fail(std::ostream& err, const char* kind, int code, const std::string& message)
{
    err << "error kind=" << kind << " code=" << code << " message=\"" << escape(message) << "\"\n";
    return code;
}

// Computes into a buffer, so nothing is written when the run fails.
int emit(const RunConfig& cfg, std::ostream& out, const std::function<int(std::ostream&)>& body)
{
    std::ostringstream buf;
    const int code = body(buf);
    if (cfg.out_path.empty()) {
        out << buf.str();
        return code;
    }
    std::ofstream f(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw InvalidParams("--out: cannot open '" + cfg.out_path + "' for writing");
    f << buf.str();
    return code;
}

void add_physics(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--m", cfg.params.m, "mass")->capture_default_str();
    sub->add_option("--alpha", cfg.params.alpha, "field strength")->capture_default_str();
    sub->add_option("--c", cfg.params.cdecay, "switch rate (negative)")->capture_default_str();
    sub->add_option("--tol", cfg.params.series_tol, "Kummer series tolerance")->capture_default_str();
    sub->add_option("--seed-threshold", cfg.seed_threshold, "R(t) at which the ODE oracle is seeded")
        ->capture_default_str();
}

} // namespace

void RunConfig::validate() const
{
    params.validate();
    if (lambda != 1 && lambda != -1)
        throw InvalidParams("--lambda must be +1 or -1");
    if (!std::isfinite(p))
        throw InvalidParams("--p must be finite");
    if (!(t1 <= 0.0))
        throw InvalidParams("--t1 must be <= 0 (the field is switched off at t = 0)");
    if (!(seed_threshold > 0.0) || seed_threshold > kSeedRegimeLimit)
        throw InvalidParams("--seed-threshold must lie in (0, 1e-10]");
    if (subcommand == "sweep" || subcommand == "vacuum")
        grid.validate();
    if (!out_path.empty()) {
        const auto parent = std::filesystem::path(out_path).parent_path();
        if (!parent.empty() && !std::filesystem::is_directory(parent))
            throw InvalidParams("--out: directory '" + parent.string() + "' does not exist");
    }
}

std::string csv_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

int run_mode_energy(const RunConfig& cfg, std::ostream& out)
{
    out << kModeHeader << '\n' << mode_row({cfg.lambda, cfg.p}, cfg) << '\n';
    return ok;
}

int run_sweep(const RunConfig& cfg, std::ostream& out)
{
    // p uniform on [-p_max, p_max]; lambda = -1 rows first
    std::vector<ModeIndex> modes;
    const int n = cfg.grid.n_points;
    for (int lam : {-1, 1}) {
        if (!cfg.both_signs && lam != cfg.lambda)
            continue;
        for (int i = 0; i < n; ++i)
            modes.push_back({lam, -cfg.grid.p_max + 2.0 * cfg.grid.p_max * i / (n - 1)});
    }
    const auto rows = parallel_map(modes.size(), [&](std::size_t i) { return mode_row(modes[i], cfg); });
    out << kModeHeader << '\n';
    for (const auto& r : rows)
        out << r << '\n';
    return ok;
}

int run_vacuum(const RunConfig& cfg, std::ostream& out, std::ostream& summary)
{
    const auto& pp = cfg.params;
    const auto pert = vacuum_density_pert(pp);
    const auto direct = vacuum_density_direct(pp, cfg.grid, Route::exact, cfg.seed_threshold);
    const auto w = cfg.grid.weights();

    out << kVacuumHeader << '\n';
    for (std::size_t i = 0; i < direct.p.size(); ++i) {
        const double p = direct.p[i];
        out << csv_number(p) << ',' << csv_number(w[i]) << ',' << csv_number(vacuum_integrand(p, pp)) << ','
            << csv_number(pair_sum(p, pp)) << ',' << csv_number(direct.pair[i]) << '\n';
    }

    const char* verdict = "false";
    if (pp.alpha == 0.0)
        verdict = "zero";
    else if (pert.density_pert < 0.0 && direct.density < 0.0)
        verdict = "true";
    summary << "# integral_I=" << csv_number(pert.integral_I) << '\n'
            << "# density_pert=" << csv_number(pert.density_pert) << '\n'
            << "# density_exact=" << csv_number(direct.density) << '\n'
            << "# tail_bound=" << csv_number(direct.tail_bound) << '\n'
            << "# density_negative=" << verdict << '\n';
    return ok;
}

int run_verify(const RunConfig& cfg, std::ostream& out)
{
    verify::Tolerances tol;
    tol.series_tol = cfg.params.series_tol;
    tol.ode_tol = cfg.params.ode_tol;
    const auto report = verify::run(tol, cfg.group, &out);
    int passed = 0;
    for (const auto& g : report.groups)
        passed += g.passed() ? 1 : 0;
    out << "verify: " << passed << '/' << report.groups.size() << " groups passed in " << report.seconds << " s\n";
    return report.passed() ? ok : verify_failed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Vacuum energy of the Dirac sea under a switched electric field"};
    app.require_subcommand(1);

    auto* mode = app.add_subcommand("mode-energy", "exact, oracle and perturbative energy of one mode");
    auto* sweep = app.add_subcommand("sweep", "mode-energy over a momentum grid");
    auto* vac = app.add_subcommand("vacuum", "vacuum energy density change per unit length");
    auto* ver = app.add_subcommand("verify", "run the property suite");

    int lambda = cfg.lambda;
    CLI::Option* lambda_opt = nullptr;
    CLI::Option* sweep_pmax = nullptr;
    CLI::Option* sweep_n = nullptr;
    for (auto* sub : {mode, sweep, vac, ver})
        add_physics(sub, cfg);
    for (auto* sub : {mode, sweep}) {
        auto* opt = sub->add_option("--lambda", lambda, "energy sign, +1 or -1");
        if (sub == sweep)
            lambda_opt = opt;
        sub->add_option("--t1", cfg.t1, "evaluation time, <= 0")->capture_default_str();
    }
    mode->add_option("--p", cfg.p, "momentum")->capture_default_str();
    sweep_pmax = sweep->add_option("--p-max", cfg.grid.p_max, "sweep p over [-p_max, p_max] (default 3)");
    sweep_n = sweep->add_option("--n-points", cfg.grid.n_points, "grid points per sign (default 13)");
    vac->add_option("--p-max", cfg.grid.p_max, "momentum cutoff")->capture_default_str();
    vac->add_option("--n-points", cfg.grid.n_points, "grid points on [0, p_max]")->capture_default_str();
    ver->add_option("--group", cfg.group, "run only this group")
        ->check(CLI::IsMember(verify::group_names()));
    for (auto* sub : {mode, sweep, vac})
        sub->add_option("--out", cfg.out_path, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        return fail(err, "usage", validation_error, e.what());
    }

    cfg.lambda = lambda;
    if (sweep->parsed()) {
        cfg.subcommand = "sweep";
        cfg.both_signs = lambda_opt->count() == 0;
        cfg.grid.scheme = GridScheme::uniform;
        if (sweep_pmax->count() == 0)
            cfg.grid.p_max = 3.0;
        if (sweep_n->count() == 0)
            cfg.grid.n_points = 13;
    } else if (mode->parsed()) {
        cfg.subcommand = "mode-energy";
    } else if (vac->parsed()) {
        cfg.subcommand = "vacuum";
    } else {
        cfg.subcommand = "verify";
    }

    try {
        cfg.validate();
        if (cfg.subcommand == "mode-energy")
            return emit(cfg, out, [&](std::ostream& o) { return run_mode_energy(cfg, o); });
        if (cfg.subcommand == "sweep")
            return emit(cfg, out, [&](std::ostream& o) { return run_sweep(cfg, o); });
        if (cfg.subcommand == "vacuum") {
            std::ostringstream summary;
            const int code = emit(cfg, out, [&](std::ostream& o) { return run_vacuum(cfg, o, summary); });
            out << summary.str();
            return code;
        }
        return run_verify(cfg, out);
    } catch (const InvalidParams& e) {
        return fail(err, "validation", validation_error, e.what());
    } catch (const CutoffTooSmall& e) {
        return fail(err, "cutoff", numerical_failure, e.what());
    } catch (const NumericalError& e) {
        return fail(err, "numerical", numerical_failure, e.what());
    } catch (const std::exception& e) {
        return fail(err, "internal", numerical_failure, e.what());
    }
}

} // namespace diracsea::cli
