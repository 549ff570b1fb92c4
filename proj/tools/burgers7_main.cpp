// Command-line driver: solve | table | converge | stability | derive-check.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 deviation from the published table values in `table --strict` mode.

#include "burgers7/run.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitStrict = 4;

std::string sibling_path(const std::string& base, const std::string& suffix,
                         const std::string& ext) {
    std::filesystem::path p(base);
    const std::string stem =
        p.has_filename() ? p.stem().string() : std::string("out");
    std::filesystem::path out = p;
    out.replace_filename(stem + suffix + ext);
    return out.string();
}

int cmd_solve(const burgers7::RunConfig& cfg) {
    const burgers7::RunReport report = burgers7::solve_run(cfg);
    std::printf("problem %s  nu_d %g  N %d  tau %g  T %g  scheme %s (%d steps, %.3f s)\n",
                report.config.problem.c_str(), report.config.nu_d, report.N,
                report.tau, report.snapshots.empty()
                                ? report.t0
                                : report.snapshots.back().time,
                report.config.scheme.c_str(), report.steps,
                report.elapsed_seconds);
    for (const burgers7::Snapshot& snap : report.snapshots) {
        if (snap.has_exact)
            std::printf("  t=%-8g L2 %.6e  Linf %.6e%s\n", snap.time, snap.l2,
                        snap.linf,
                        snap.exact_reliable ? "" : "  [reference unreliable]");
        else
            std::printf("  t=%-8g (no reference)\n", snap.time);
    }

    std::string out = cfg.out;
    if (out.empty()) out = cfg.format == "json" ? "solve.json" : "solve.csv";
    if (cfg.format == "json") {
        burgers7::write_report_json(report, out);
        std::printf("wrote %s\n", out.c_str());
    } else {
        for (const std::string& path : burgers7::write_solve_csv(report, out))
            std::printf("wrote %s\n", path.c_str());
    }
    return kExitOk;
}

int cmd_table(int table_id, std::string out, bool strict, double tol) {
    const burgers7::TableRun run = burgers7::run_table(table_id);
    if (out.empty()) out = "table" + std::to_string(table_id) + ".csv";
    const std::string dev_path = sibling_path(out, "_deviations", ".json");
    burgers7::write_table_csv(run, out);
    burgers7::write_table_deviations_json(run, dev_path);

    std::printf("%s\n", burgers7::printed_table(table_id).citation.c_str());
    std::printf("max |computed - printed| = %.3e over %zu cells\n",
                run.max_deviation, run.cells.size());
    for (const auto& [label, vals] : run.footers) {
        std::printf("  %s:", label.c_str());
        for (double v : vals) std::printf(" %.6e", v);
        std::printf("\n");
    }
    std::printf("wrote %s\nwrote %s\n", out.c_str(), dev_path.c_str());

    if (strict && run.max_deviation > tol) {
        std::fprintf(stderr,
                     "strict: deviation %.3e exceeds tolerance %.3e\n",
                     run.max_deviation, tol);
        return kExitStrict;
    }
    return kExitOk;
}

int cmd_converge(const std::string& mode, int levels, std::string out) {
    std::vector<burgers7::ConvergeRow> rows;
    if (mode == "ode")
        rows = burgers7::converge_ode(levels);
    else if (mode == "space")
        rows = burgers7::converge_space(levels);
    else if (mode == "time")
        rows = burgers7::converge_time(levels);
    else
        throw burgers7::ConfigError("converge mode must be ode, space, or time");

    if (out.empty()) out = "converge_" + mode + ".csv";
    burgers7::write_converge_csv(rows, out);
    for (const burgers7::ConvergeRow& row : rows) {
        if (row.order)
            std::printf("  step %.6e  error %.6e  order %.3f\n", row.step,
                        row.error, *row.order);
        else
            std::printf("  step %.6e  error %.6e\n", row.step, row.error);
    }
    std::printf("wrote %s\n", out.c_str());
    return kExitOk;
}

int cmd_stability(const std::string& out, int samples, int thetas) {
    const burgers7::StabilityExport ex =
        burgers7::stability_export(samples, thetas);
    double worst = 0.0;
    for (const burgers7::LocusPoint& p : ex.locus)
        worst = std::max(worst, p.residual);
    std::printf("%zu amplification samples, %zu boundary-locus points "
                "(worst |Psi|-1 residual %.3e)\n",
                ex.s.size(), ex.locus.size(), worst);
    for (const std::string& path : burgers7::write_stability_csv(ex, out))
        std::printf("wrote %s\n", path.c_str());
    return kExitOk;
}

int cmd_derive_check() {
    const burgers7::DeriveCheckReport rep = burgers7::derive_check();
    for (const std::string& line : rep.lines) std::printf("%s\n", line.c_str());
    std::printf("%d printed-vs-derived discrepancies flagged\n",
                rep.discrepancies);
    return rep.internally_consistent ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seventh-order weakly L-stable Burgers solver"};
    app.require_subcommand(1);

    // --- solve -------------------------------------------------------------
    auto* solve =
        app.add_subcommand("solve", "Run one Hopf-Cole solve and export it");
    solve->set_help_flag("--help", "print this help message");  // frees --h
    std::string config_path;
    burgers7::RunConfig flags;  // holders for explicitly given flags
    solve->add_option("--config", config_path,
                      "key = value config file (flags override it)");
    auto* f_problem =
        solve->add_option("--problem", flags.problem, "ex1..ex6");
    auto* f_nu = solve->add_option("--nu", flags.nu_d, "diffusivity nu_d");
    double opt_h = 0.0, opt_tau = 0.0, opt_T = 0.0;
    int opt_N = 0, opt_M = 0;
    auto* f_h = solve->add_option("--h", opt_h, "mesh spacing");
    auto* f_N = solve->add_option("--N", opt_N, "number of cells");
    auto* f_tau = solve->add_option("--tau", opt_tau, "time step");
    auto* f_M = solve->add_option("--M", opt_M, "number of time steps");
    auto* f_T = solve->add_option("--T", opt_T, "final time");
    auto* f_scheme =
        solve->add_option("--scheme", flags.scheme, "hoc7 or cn");
    auto* f_exact = solve->add_option("--exact", flags.exact,
                                      "auto, fourier, closed, or none");
    std::vector<double> opt_times;
    auto* f_times = solve->add_option("--report-times", opt_times,
                                      "comma-separated snapshot times")
                        ->delimiter(',');
    auto* f_out = solve->add_option("--out", flags.out, "output path");
    auto* f_format =
        solve->add_option("--format", flags.format, "csv or json");
    auto* f_strict = solve->add_flag("--strict", "echoed into the report");

    // --- table -------------------------------------------------------------
    auto* table = app.add_subcommand(
        "table", "Reproduce a published table and report deviations");
    int table_id = 1;
    table->add_option("id", table_id, "table number 1..7")->required();
    std::string table_out;
    table->add_option("--out", table_out, "CSV path (JSON lands next to it)");
    bool table_strict = false;
    table->add_flag("--strict", table_strict,
                    "exit 4 when any cell deviates beyond --tol");
    double table_tol = 5e-5;
    table->add_option("--tol", table_tol, "strict-mode deviation tolerance");

    // --- converge ----------------------------------------------------------
    auto* converge =
        app.add_subcommand("converge", "Refinement study (step,error,order)");
    std::string converge_mode;
    converge->add_option("mode", converge_mode, "ode, space, or time")
        ->required();
    int converge_levels = 5;
    converge->add_option("--levels", converge_levels, "refinement levels");
    std::string converge_out;
    converge->add_option("--out", converge_out, "CSV path");

    // --- stability ---------------------------------------------------------
    auto* stability = app.add_subcommand(
        "stability", "Export amplification samples and the boundary locus");
    std::string stability_out = "stability.csv";
    stability->add_option("--out", stability_out, "base path for the pair");
    int stability_samples = 241, stability_thetas = 720;
    stability->add_option("--samples", stability_samples,
                          "amplification sample count");
    stability->add_option("--thetas", stability_thetas,
                          "boundary-locus angle count");

    // --- derive-check ------------------------------------------------------
    app.add_subcommand("derive-check",
                       "Re-derive the scheme coefficients in exact "
                       "arithmetic and audit the published variants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (solve->parsed()) {
            burgers7::RunConfig cfg;
            if (!config_path.empty())
                cfg = burgers7::load_config_file(config_path);
            if (f_problem->count()) cfg.problem = flags.problem;
            if (f_nu->count()) cfg.nu_d = flags.nu_d;
            if (f_h->count()) cfg.h = opt_h;
            if (f_N->count()) cfg.N = opt_N;
            if (f_tau->count()) cfg.tau = opt_tau;
            if (f_M->count()) cfg.M = opt_M;
            if (f_T->count()) cfg.T = opt_T;
            if (f_scheme->count()) cfg.scheme = flags.scheme;
            if (f_exact->count()) cfg.exact = flags.exact;
            if (f_times->count()) cfg.report_times = opt_times;
            if (f_out->count()) cfg.out = flags.out;
            if (f_format->count()) cfg.format = flags.format;
            if (f_strict->count()) cfg.strict = true;
            return cmd_solve(cfg);
        }
        if (table->parsed())
            return cmd_table(table_id, table_out, table_strict, table_tol);
        if (converge->parsed())
            return cmd_converge(converge_mode, converge_levels, converge_out);
        if (stability->parsed())
            return cmd_stability(stability_out, stability_samples,
                                 stability_thetas);
        return cmd_derive_check();
    } catch (const burgers7::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumerical;
    }
}
