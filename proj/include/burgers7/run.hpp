#pragma once

/// Run orchestration shared by the CLI and the tests: config resolution, the
/// full solve pipeline (transform, march, invert, compare), table
/// reproduction, refinement studies, stability exports, and the
/// coefficient-derivation report, plus CSV/JSON serialization for all of it.

#include "burgers7/exact.hpp"
#include "burgers7/grid.hpp"
#include "burgers7/heat.hpp"
#include "burgers7/metrics.hpp"
#include "burgers7/problems.hpp"
#include "burgers7/scheme.hpp"
#include "burgers7/tables.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace burgers7 {

/// Rejected configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Failure inside the numerics (CLI exit code 3).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string problem = "ex1";
    double nu_d = 2.0;
    std::optional<double> h;
    std::optional<int> N;
    std::optional<double> tau;
    std::optional<int> M;
    std::optional<double> T;
    std::string scheme = "hoc7";
    std::string exact = "auto";  ///< auto | fourier | closed | none
    std::vector<double> report_times;
    std::string out;
    std::string format = "csv";  ///< csv | json
    bool strict = false;
};

bool operator==(const RunConfig& a, const RunConfig& b);

/// Validated, fully resolved run parameters.
struct ResolvedRun {
    const Problem* problem = nullptr;
    double nu_d = 0.0;
    GridSpec grid;       ///< grid.M is >= 1 even for zero-step runs
    int steps = 0;       ///< actual number of time steps (0 when T == t_init)
    Scheme scheme = Scheme::hoc7;
    ExactKind exact_kind = ExactKind::none;
    std::vector<int> report_steps;  ///< sorted step indices to snapshot
};

ResolvedRun resolve_config(const RunConfig& config);

struct Snapshot {
    double time = 0.0;
    std::vector<double> w;
    std::vector<double> exact;  ///< empty when no reference requested
    bool has_exact = false;
    bool exact_reliable = true;
    double l2 = 0.0;
    double linf = 0.0;
};

struct RunReport {
    RunConfig config;
    double a0 = 0.0, a1 = 0.0, h = 0.0, tau = 0.0, t0 = 0.0;
    int N = 0;
    int steps = 0;
    std::vector<double> x;
    std::vector<Snapshot> snapshots;
    double psi_min = 0.0;  ///< min psi over every step and node
    bool nonfinite = false;
    double conservation_drift = 0.0;  ///< relative drift of the weighted sum
    double max_w = 0.0;               ///< max |w| over all snapshots
    double max_w0 = 0.0;              ///< max |w0| over the grid
    double elapsed_seconds = 0.0;
};

RunReport solve_run(const RunConfig& config);

/// Serialization. A report round-trips: parse(to_json(r)) == to_json(r).
nlohmann::json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

/// Formats with 17 significant digits so parsing recovers the exact double.
std::string format_g17(double v);

/// Writes one CSV per snapshot (columns x,numeric,exact,abs_error plus a
/// summary row) next to `path_base`; returns the files written.
std::vector<std::string> write_solve_csv(const RunReport& report,
                                         const std::string& path_base);
void write_report_json(const RunReport& report, const std::string& path);

/// Plain-text `key = value` config file, # comments; keys mirror the CLI
/// flags (problem, nu, h, N, tau, M, T, scheme, exact, report-times, out,
/// format, strict).
RunConfig load_config_file(const std::string& path);
void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value);

// --- table reproduction ----------------------------------------------------

struct TableCell {
    double x = 0.0;
    double time = 0.0;
    double computed = 0.0;
    double printed = 0.0;   ///< the published present-method value
    double deviation = 0.0; ///< |computed - printed|
};

struct TableRun {
    int table_id = 0;
    RunReport report;
    std::vector<TableCell> cells;
    double max_deviation = 0.0;
    /// Recomputed error norms: full-grid Linf and the printed-row L2
    /// convention, scaled like the published footers.
    std::vector<std::pair<std::string, std::vector<double>>> footers;
};

TableRun run_table(int table_id);
void write_table_csv(const TableRun& run, const std::string& path);
void write_table_deviations_json(const TableRun& run, const std::string& path);

// --- refinement studies ----------------------------------------------------

struct ConvergeRow {
    double step = 0.0;
    double error = 0.0;
    std::optional<double> order;
};

std::vector<ConvergeRow> converge_ode(int levels = 5);
std::vector<ConvergeRow> converge_space(int levels = 5);
std::vector<ConvergeRow> converge_time(int levels = 5);
void write_converge_csv(const std::vector<ConvergeRow>& rows,
                        const std::string& path);

// --- stability exports -----------------------------------------------------

struct StabilityExport {
    std::vector<double> s;    ///< sample abscissae (starts at 0)
    std::vector<double> psi;  ///< stability function values
    std::vector<LocusPoint> locus;
};

StabilityExport stability_export(int n_samples = 241, int n_theta = 720);
/// Writes <base>_psi.csv and <base>_locus.csv; returns the paths.
std::vector<std::string> write_stability_csv(const StabilityExport& ex,
                                             const std::string& path_base);

// --- coefficient derivation report ----------------------------------------

struct DeriveCheckReport {
    std::vector<std::string> lines;
    bool internally_consistent = false;
    int discrepancies = 0;  ///< printed-vs-derived mismatches flagged
};

DeriveCheckReport derive_check();

}  // namespace burgers7
