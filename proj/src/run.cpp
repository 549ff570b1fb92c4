#include "burgers7/run.hpp"

#include "burgers7/hopf_cole.hpp"
#include "burgers7/spatial.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

namespace burgers7 {

bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.problem == b.problem && a.nu_d == b.nu_d && a.h == b.h &&
           a.N == b.N && a.tau == b.tau && a.M == b.M && a.T == b.T &&
           a.scheme == b.scheme && a.exact == b.exact &&
           a.report_times == b.report_times && a.out == b.out &&
           a.format == b.format && a.strict == b.strict;
}

namespace {

bool nearly_equal(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

int checked_round(double value, const char* what) {
    const double r = std::llround(value);
    if (std::abs(value - r) > 1e-12 * std::max(1.0, std::abs(value)))
        throw ConfigError(std::string(what) +
                          " is not commensurate with the step size");
    return static_cast<int>(r);
}

}  // namespace

ResolvedRun resolve_config(const RunConfig& config) {
    ResolvedRun rr;
    try {
        rr.problem = &get_problem(config.problem);
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
    const Problem& p = *rr.problem;

    if (!(config.nu_d > 0)) throw ConfigError("--nu must be positive");
    rr.nu_d = config.nu_d;

    try {
        rr.scheme = scheme_from_name(config.scheme);
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }

    if (!config.T) throw ConfigError("--T is required");
    const double T = *config.T;
    if (T < p.t_init - 1e-15 * std::max(1.0, std::abs(p.t_init)))
        throw ConfigError("--T must be >= the problem's initial time " +
                          std::to_string(p.t_init));
    const bool zero_steps = nearly_equal(T, p.t_init, 1e-15);

    // Spatial resolution.
    if (config.h && config.N)
        throw ConfigError("give --h or --N, not both");
    int N = 0;
    if (config.N) {
        N = *config.N;
    } else if (config.h) {
        if (!(*config.h > 0)) throw ConfigError("--h must be positive");
        N = checked_round((p.a1 - p.a0) / *config.h, "--h");
    } else {
        throw ConfigError("give --h or --N");
    }
    if (N < 4) throw ConfigError("need at least 4 space cells");

    // Temporal resolution.
    double tau = 0.0;
    if (config.tau && config.M)
        throw ConfigError("give --tau or --M, not both");
    if (zero_steps) {
        if (config.M)
            throw ConfigError("--M given but --T equals the initial time");
        rr.steps = 0;
    } else {
        if (config.M) {
            if (*config.M < 1) throw ConfigError("--M must be >= 1");
            rr.steps = *config.M;
            tau = (T - p.t_init) / rr.steps;
        } else if (config.tau) {
            if (!(*config.tau > 0)) throw ConfigError("--tau must be positive");
            tau = *config.tau;
            rr.steps = checked_round((T - p.t_init) / tau, "--T");
            if (rr.steps < 1) throw ConfigError("--tau exceeds the time span");
        } else {
            throw ConfigError("give --tau or --M");
        }
    }

    try {
        rr.grid = GridSpec::make(p.a0, p.a1, N, p.t_init, T,
                                 std::max(rr.steps, 1));
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }

    // Reference-solution kind.
    if (config.exact == "auto") {
        rr.exact_kind = p.exact;
    } else if (config.exact == "none") {
        rr.exact_kind = ExactKind::none;
    } else if (config.exact == "fourier") {
        rr.exact_kind = ExactKind::fourier;
    } else if (config.exact == "closed") {
        if (p.exact != ExactKind::shock && p.exact != ExactKind::two_mode)
            throw ConfigError("problem '" + p.name +
                              "' has no closed-form reference");
        rr.exact_kind = p.exact;
    } else {
        throw ConfigError("--exact must be auto, fourier, closed, or none");
    }
    if (rr.exact_kind == ExactKind::fourier) {
        if (!p.w0_integral || p.a0 != 0.0 || p.a1 != 1.0)
            throw ConfigError("problem '" + p.name +
                              "' has no Fourier reference on (0,1)");
    }

    // Report times -> step indices.
    std::set<int> steps_set;
    if (config.report_times.empty()) {
        steps_set.insert(rr.steps);
    } else {
        for (double rt : config.report_times) {
            const double offset = rt - p.t_init;
            int n = 0;
            if (zero_steps) {
                if (!nearly_equal(rt, p.t_init, 1e-12))
                    throw ConfigError(
                        "--report-times must equal the initial time for a "
                        "zero-step run");
            } else {
                if (offset < -1e-12)
                    throw ConfigError("--report-times before initial time");
                n = checked_round(offset / rr.grid.tau, "--report-times");
                if (n < 0 || n > rr.steps)
                    throw ConfigError("--report-times outside [t0, T]");
            }
            steps_set.insert(n);
        }
    }
    rr.report_steps.assign(steps_set.begin(), steps_set.end());

    if (config.format != "csv" && config.format != "json")
        throw ConfigError("--format must be csv or json");
    return rr;
}

RunReport solve_run(const RunConfig& config) {
    const ResolvedRun rr = resolve_config(config);
    const auto t_start = std::chrono::steady_clock::now();
    const Problem& p = *rr.problem;
    const GridSpec& g = rr.grid;
    const double nu = rr.nu_d;

    RunReport rep;
    rep.config = config;
    rep.a0 = g.a0;
    rep.a1 = g.a1;
    rep.h = g.h;
    rep.tau = rr.steps > 0 ? g.tau : 0.0;
    rep.t0 = g.t0;
    rep.N = g.N;
    rep.steps = rr.steps;
    rep.x.resize(g.nodes());
    for (int i = 0; i < g.nodes(); ++i) rep.x[i] = g.x(i);

    auto w0 = [&](double x) { return p.w0(x, nu); };
    for (double xi : rep.x) rep.max_w0 = std::max(rep.max_w0, std::abs(w0(xi)));

    Eigen::VectorXd psi;
    try {
        psi = forward_transform(w0, g, nu);
    } catch (const std::domain_error& e) {
        throw NumericalError(std::string("forward transform failed: ") +
                             e.what());
    }

    std::unique_ptr<FourierSolution> fourier;
    if (rr.exact_kind == ExactKind::fourier) {
        auto integral = p.w0_integral;
        fourier = std::make_unique<FourierSolution>(
            [integral, nu](double x) {
                return std::exp(-integral(x, nu) / nu);
            },
            nu);
    }

    const Eigen::VectorXd weights = trapezoid_weights(g.N, g.h);
    const double sum0 = weights.dot(psi);
    rep.psi_min = psi.minCoeff();
    rep.nonfinite = !psi.allFinite();

    auto snapshot_at = [&](int step, const Eigen::VectorXd& psi_j) {
        Snapshot snap;
        snap.time = g.t0 + step * (rr.steps > 0 ? g.tau : 0.0);
        Eigen::VectorXd w;
        try {
            w = inverse_transform(psi_j, g.h, nu);
        } catch (const std::domain_error& e) {
            throw NumericalError("inverse transform failed at t=" +
                                 std::to_string(snap.time) + ": " + e.what());
        }
        snap.w.assign(w.data(), w.data() + w.size());
        for (double v : snap.w) rep.max_w = std::max(rep.max_w, std::abs(v));

        if (rr.exact_kind != ExactKind::none) {
            Eigen::VectorXd ex(g.nodes());
            bool reliable = true;
            if (rr.exact_kind == ExactKind::fourier) {
                try {
                    const auto ge = fourier->evaluate_many(rep.x, snap.time);
                    ex = ge.w;
                    reliable = ge.reliable;
                } catch (const std::exception& e) {
                    throw NumericalError(
                        std::string("Fourier reference failed: ") + e.what());
                }
            } else if (rr.exact_kind == ExactKind::shock) {
                for (int i = 0; i < g.nodes(); ++i)
                    ex(i) = shock_exact(rep.x[i], snap.time, nu);
            } else {
                for (int i = 0; i < g.nodes(); ++i)
                    ex(i) = two_mode_exact(rep.x[i], snap.time, nu);
            }
            const ErrorReport err = error_norms(w, ex, g.h, nullptr, reliable);
            snap.exact.assign(ex.data(), ex.data() + ex.size());
            snap.has_exact = true;
            snap.exact_reliable = reliable;
            snap.l2 = err.l2;
            snap.linf = err.linf;
        }
        rep.snapshots.push_back(std::move(snap));
    };

    std::set<int> report(rr.report_steps.begin(), rr.report_steps.end());
    if (report.count(0)) snapshot_at(0, psi);

    if (rr.steps > 0) {
        const HeatPropagator prop(g, nu, rr.scheme);
        psi = prop.advance(
            std::move(psi), rr.steps, [&](int j, const Eigen::VectorXd& pj) {
                rep.psi_min = std::min(rep.psi_min, pj.minCoeff());
                if (!pj.allFinite()) rep.nonfinite = true;
                const double sj = weights.dot(pj);
                rep.conservation_drift =
                    std::max(rep.conservation_drift,
                             std::abs(sj - sum0) /
                                 std::max(std::abs(sum0), 1e-300));
                if (report.count(j)) snapshot_at(j, pj);
            });
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      t_start)
            .count();
    return rep;
}

// --- serialization ---------------------------------------------------------

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

nlohmann::json optional_to_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

nlohmann::json optional_to_json(const std::optional<int>& v) {
    if (v) return *v;
    return nullptr;
}

}  // namespace

nlohmann::json config_to_json(const RunConfig& c) {
    return nlohmann::json{{"problem", c.problem},
                          {"nu", c.nu_d},
                          {"h", optional_to_json(c.h)},
                          {"N", optional_to_json(c.N)},
                          {"tau", optional_to_json(c.tau)},
                          {"M", optional_to_json(c.M)},
                          {"T", optional_to_json(c.T)},
                          {"scheme", c.scheme},
                          {"exact", c.exact},
                          {"report_times", c.report_times},
                          {"out", c.out},
                          {"format", c.format},
                          {"strict", c.strict}};
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    c.problem = j.at("problem").get<std::string>();
    c.nu_d = j.at("nu").get<double>();
    if (!j.at("h").is_null()) c.h = j.at("h").get<double>();
    if (!j.at("N").is_null()) c.N = j.at("N").get<int>();
    if (!j.at("tau").is_null()) c.tau = j.at("tau").get<double>();
    if (!j.at("M").is_null()) c.M = j.at("M").get<int>();
    if (!j.at("T").is_null()) c.T = j.at("T").get<double>();
    c.scheme = j.at("scheme").get<std::string>();
    c.exact = j.at("exact").get<std::string>();
    c.report_times = j.at("report_times").get<std::vector<double>>();
    c.out = j.at("out").get<std::string>();
    c.format = j.at("format").get<std::string>();
    c.strict = j.at("strict").get<bool>();
    return c;
}

nlohmann::json report_to_json(const RunReport& r) {
    nlohmann::json snaps = nlohmann::json::array();
    for (const Snapshot& s : r.snapshots)
        snaps.push_back({{"time", s.time},
                         {"w", s.w},
                         {"exact", s.exact},
                         {"has_exact", s.has_exact},
                         {"exact_reliable", s.exact_reliable},
                         {"l2", s.l2},
                         {"linf", s.linf}});
    return nlohmann::json{{"config", config_to_json(r.config)},
                          {"a0", r.a0},
                          {"a1", r.a1},
                          {"h", r.h},
                          {"tau", r.tau},
                          {"t0", r.t0},
                          {"N", r.N},
                          {"steps", r.steps},
                          {"x", r.x},
                          {"snapshots", snaps},
                          {"psi_min", r.psi_min},
                          {"nonfinite", r.nonfinite},
                          {"conservation_drift", r.conservation_drift},
                          {"max_w", r.max_w},
                          {"max_w0", r.max_w0},
                          {"elapsed_seconds", r.elapsed_seconds}};
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport r;
    r.config = config_from_json(j.at("config"));
    r.a0 = j.at("a0").get<double>();
    r.a1 = j.at("a1").get<double>();
    r.h = j.at("h").get<double>();
    r.tau = j.at("tau").get<double>();
    r.t0 = j.at("t0").get<double>();
    r.N = j.at("N").get<int>();
    r.steps = j.at("steps").get<int>();
    r.x = j.at("x").get<std::vector<double>>();
    for (const auto& js : j.at("snapshots")) {
        Snapshot s;
        s.time = js.at("time").get<double>();
        s.w = js.at("w").get<std::vector<double>>();
        s.exact = js.at("exact").get<std::vector<double>>();
        s.has_exact = js.at("has_exact").get<bool>();
        s.exact_reliable = js.at("exact_reliable").get<bool>();
        s.l2 = js.at("l2").get<double>();
        s.linf = js.at("linf").get<double>();
        r.snapshots.push_back(std::move(s));
    }
    r.psi_min = j.at("psi_min").get<double>();
    r.nonfinite = j.at("nonfinite").get<bool>();
    r.conservation_drift = j.at("conservation_drift").get<double>();
    r.max_w = j.at("max_w").get<double>();
    r.max_w0 = j.at("max_w0").get<double>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    return r;
}

// --- CSV output ------------------------------------------------------------

namespace {

std::ofstream open_output(const std::string& path) {
    const std::filesystem::path fp(path);
    if (fp.has_parent_path())
        std::filesystem::create_directories(fp.parent_path());
    std::ofstream out(fp, std::ios::binary);  // binary: LF endings everywhere
    if (!out)
        throw NumericalError("cannot open output file '" + path + "'");
    return out;
}

std::string time_tag(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

/// Splits "dir/name.csv" into "dir/name" + ".csv" (default extension kept).
std::pair<std::string, std::string> split_extension(const std::string& path) {
    const std::filesystem::path fp(path);
    std::string ext = fp.extension().string();
    if (ext.empty()) ext = ".csv";
    std::filesystem::path stem = fp;
    stem.replace_extension();
    return {stem.string(), ext};
}

}  // namespace

std::vector<std::string> write_solve_csv(const RunReport& report,
                                         const std::string& path_base) {
    const auto [stem, ext] = split_extension(path_base);
    std::vector<std::string> written;
    for (const Snapshot& s : report.snapshots) {
        const std::string path = stem + "_t" + time_tag(s.time) + ext;
        std::ofstream out = open_output(path);
        out << "x,numeric,exact,abs_error\n";
        for (std::size_t i = 0; i < s.w.size(); ++i) {
            out << format_g17(report.x[i]) << ',' << format_g17(s.w[i]) << ',';
            if (s.has_exact)
                out << format_g17(s.exact[i]) << ','
                    << format_g17(std::abs(s.w[i] - s.exact[i]));
            else
                out << ',';
            out << '\n';
        }
        if (s.has_exact)
            out << "summary," << format_g17(s.l2) << ',' << format_g17(s.linf)
                << ',' << (s.exact_reliable ? 1 : 0) << '\n';
        else
            out << "summary,,,\n";
        written.push_back(path);
    }
    return written;
}

void write_report_json(const RunReport& report, const std::string& path) {
    std::ofstream out = open_output(path);
    out << report_to_json(report).dump(2) << '\n';
}

// --- config files ----------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value '" + v + "' for " + key);
    }
}

int parse_int(const std::string& v, const std::string& key) {
    try {
        std::size_t used = 0;
        const int i = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ConfigError("bad integer value '" + v + "' for " + key);
    }
}

}  // namespace

void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value) {
    if (key == "problem") {
        config.problem = value;
    } else if (key == "nu") {
        config.nu_d = parse_double(value, key);
    } else if (key == "h") {
        config.h = parse_double(value, key);
    } else if (key == "N") {
        config.N = parse_int(value, key);
    } else if (key == "tau") {
        config.tau = parse_double(value, key);
    } else if (key == "M") {
        config.M = parse_int(value, key);
    } else if (key == "T") {
        config.T = parse_double(value, key);
    } else if (key == "scheme") {
        config.scheme = value;
    } else if (key == "exact") {
        config.exact = value;
    } else if (key == "report-times") {
        config.report_times.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (!item.empty())
                config.report_times.push_back(parse_double(item, key));
        }
    } else if (key == "out") {
        config.out = value;
    } else if (key == "format") {
        config.format = value;
    } else if (key == "strict") {
        if (value == "true" || value == "1")
            config.strict = true;
        else if (value == "false" || value == "0")
            config.strict = false;
        else
            throw ConfigError("bad boolean value '" + value + "' for strict");
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    RunConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": empty key");
        try {
            apply_config_entry(config, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(lineno) + ": " +
                              e.what());
        }
    }
    return config;
}

}  // namespace burgers7
