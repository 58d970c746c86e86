// experiment.cpp — Config parsing, presets and pipeline dispatch

#include "ri/experiment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ri/analytic.hpp"
#include "ri/errors.hpp"
#include "ri/io.hpp"
#include "ri/random.hpp"
#include "ri/thermo.hpp"

namespace ri::experiment {

namespace {

constexpr std::array<std::string_view, 7> kParamFields{"omega_s", "omega_a", "j_xx", "j_yy",
                                                       "j_zz",    "beta",    "tau"};

double& param_slot(RIParams& p, std::string_view name) {
    if (name == "omega_s") return p.omega_s;
    if (name == "omega_a") return p.omega_a;
    if (name == "j_xx") return p.j_xx;
    if (name == "j_yy") return p.j_yy;
    if (name == "j_zz") return p.j_zz;
    if (name == "beta") return p.beta;
    if (name == "tau") return p.tau;
    throw ValidationError("sweep_axes.name", "'" + std::string(name) + "' is not an RIParams field");
}

template <class Fields>
void reject_unknown(const json& j, const Fields& known, const std::string& what) {
    if (!j.is_object()) throw ValidationError(what, "expected an object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ValidationError(what.empty() ? key : what + "." + key, "unknown field");
        }
    }
}

template <class T>
T read(const json& j, const char* key, const std::string& field, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ValidationError(field, "has the wrong type");
    }
}

std::string compact(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// Cartesian product of the axes, last axis fastest.
std::vector<std::vector<double>> grid_points(const std::vector<GridAxis>& axes) {
    std::vector<std::vector<double>> points{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<double>> next;
        const auto samples = axis.samples();
        next.reserve(points.size() * samples.size());
        for (const auto& prefix : points) {
            for (double v : samples) {
                auto row = prefix;
                row.push_back(v);
                next.push_back(std::move(row));
            }
        }
        points = std::move(next);
    }
    return points;
}

RIParams params_at(const ExperimentConfig& c, const std::vector<double>& point) {
    RIParams p = c.params;
    for (std::size_t i = 0; i < point.size(); ++i) param_slot(p, c.sweep_axes[i].name) = point[i];
    return p;
}

io::Prefix prefix_at(const ExperimentConfig& c, const std::vector<double>& point) {
    io::Prefix prefix;
    for (const auto& axis : c.sweep_axes) prefix.names.push_back(axis.name);
    prefix.values = point;
    return prefix;
}

std::string resonance_message(const RIParams& p) {
    const auto [theta, phi] = theta_phi(p);
    return "degenerate parameters: eta = 1, so the populations never relax. This happens when "
           "sin(theta*tau/2) and sin(phi*tau/2) both vanish for nonzero couplings (resonant collision "
           "time, theta*tau and phi*tau multiples of 2*pi) or when j_xx = j_yy = 0; here theta*tau = "
           + compact(theta * p.tau) + ", phi*tau = " + compact(phi * p.tau);
}

json error_json(std::string_view kind, const std::string& message) {
    return {{"error", std::string(kind)}, {"message", message}};
}

RunResult fail(int code, json error) {
    RunResult r;
    r.exit_code = code;
    r.summary = "error: " + error.value("message", std::string("unknown"));
    r.error = std::move(error);
    return r;
}

RunResult run_simulate(const ExperimentConfig& c, std::ostream& out) {
    const QubitState s0 = c.initial_state.resolve();
    const auto points = grid_points(c.sweep_axes);
    io::write_trajectory_header(out, c.with_ledger, prefix_at(c, {}));
    double p_lo = 1.0;
    double p_hi = 0.0;
    double c_max = 0.0;
    double work = 0.0;
    for (const auto& point : points) {
        const RIParams p = params_at(c, point);
        const auto rec = run_trajectory(s0, p, c.n_steps, TrajectoryOptions{c.with_ledger, c.stride});
        io::write_trajectory_rows(out, rec, prefix_at(c, point));
        const QubitState& f = rec.final_state();
        p_lo = std::min(p_lo, f.p);
        p_hi = std::max(p_hi, f.p);
        c_max = std::max(c_max, f.coherence_magnitude());
        if (rec.has_ledger()) work = rec.invested_work.back();
    }
    RunResult r;
    if (points.size() == 1) {
        r.summary = "simulate: " + std::to_string(c.n_steps) + " steps, final p = " + io::format_double(p_lo)
                    + ", final |c| = " + io::format_double(c_max);
        if (c.with_ledger) r.summary += ", invested work = " + io::format_double(work);
    } else {
        r.summary = "simulate: " + std::to_string(points.size()) + " trajectories x " + std::to_string(c.n_steps)
                    + " steps, final p in [" + io::format_double(p_lo) + ", " + io::format_double(p_hi)
                    + "], max final |c| = " + io::format_double(c_max);
    }
    return r;
}

RunResult run_steady(const ExperimentConfig& c, std::ostream& out) {
    if (c.sweep_axes.empty()) {
        const auto summary = analytic::summarize(c.params);
        const json j = io::to_json(summary);
        out << j.dump(2) << '\n';
        if (summary.degenerate) {
            return fail(kExitDegenerate, error_json("degenerate", resonance_message(c.params)));
        }
        RunResult r;
        r.summary = j.dump();
        return r;
    }
    const auto points = grid_points(c.sweep_axes);
    for (const auto& axis : c.sweep_axes) out << axis.name << ',';
    out << "eta,p_inf,p_inf_short_tau,degenerate,p_a\n";
    long long degenerate = 0;
    double p_lo = 1.0;
    double p_hi = 0.0;
    for (const auto& point : points) {
        const auto s = analytic::summarize(params_at(c, point));
        for (double v : point) out << io::format_double(v) << ',';
        out << io::format_double(s.eta) << ',';
        if (s.p_inf) {
            out << io::format_double(*s.p_inf);
            p_lo = std::min(p_lo, *s.p_inf);
            p_hi = std::max(p_hi, *s.p_inf);
        }
        out << ',';
        if (s.p_inf_short_tau) out << io::format_double(*s.p_inf_short_tau);
        out << ',' << (s.degenerate ? 1 : 0) << ',' << io::format_double(s.p_a) << '\n';
        degenerate += s.degenerate ? 1 : 0;
    }
    RunResult r;
    r.summary = "steady: " + std::to_string(points.size()) + " grid points, p_inf in [" + io::format_double(p_lo)
                + ", " + io::format_double(p_hi) + "], " + std::to_string(degenerate)
                + " degenerate points left blank";
    return r;
}

RunResult run_resources(const ExperimentConfig& c, std::ostream& out) {
    const QubitState s0 = c.initial_state.resolve();
    if (analytic::is_degenerate(c.params)) {
        return fail(kExitDegenerate, error_json("degenerate", resonance_message(c.params)));
    }
    const auto report = metrics::n_star_numeric(s0, c.params, c.epsilons.front(), c.metrics.front(), c.max_steps);
    const json j = io::to_json(report, thermo::asymptotic_housekeeping(c.params));
    out << j.dump(2) << '\n';
    RunResult r;
    r.summary = j.dump();
    return r;
}

RunResult run_thermalize(const ExperimentConfig& c, std::ostream& out) {
    protocols::ProtocolConfig pc = c.protocol;
    const std::optional<QubitState> fixed =
        c.initial_state.is_per_run() ? std::nullopt : std::optional<QubitState>(c.initial_state.resolve());

    io::write_trajectory_header(out, true, io::Prefix{{"seed"}, {}}, true);
    for (long long i = 0; i < c.seeds; ++i) {
        protocols::ProtocolConfig run = pc;
        run.seed = pc.seed + static_cast<std::uint64_t>(i);
        const QubitState s0 = fixed ? *fixed : protocols::ensemble_initial_state(run.seed);
        const auto rec = protocols::randomized_thermalization(s0, run);
        // Seeds are integers; keep them exact rather than printing as doubles.
        std::ostringstream rows;
        io::write_trajectory_rows(rows, rec);
        std::istringstream lines(rows.str());
        for (std::string line; std::getline(lines, line);) out << run.seed << ',' << line << '\n';
    }
    const auto summary = protocols::thermalization_ensemble(pc, c.seeds, c.threshold, fixed);
    const auto diag = protocols::regime_diagnostics(pc);
    json j = io::to_json(summary);
    j["warnings"] = diag.warnings;
    j["theta_over_phi"] = diag.theta_over_phi;
    j["j_tau"] = diag.j_tau;
    RunResult r;
    r.report = j;
    json line{{"seeds_run", summary.seeds_run}, {"success_fraction", summary.success_fraction}};
    line["median_n_to_threshold"] = j["median_n_to_threshold"];
    r.summary = line.dump();
    if (!diag.warnings.empty()) r.summary += " (" + std::to_string(diag.warnings.size()) + " regime warnings)";
    return r;
}

RunResult run_sweep(const ExperimentConfig& c, std::ostream& out) {
    const QubitState s0 = c.initial_state.resolve();
    const auto points = grid_points(c.sweep_axes);
    for (const auto& axis : c.sweep_axes) out << axis.name << ',';
    out << "epsilon,metric,n_star,total_work\n";
    long long failed_convergence = 0;
    long long failed_degenerate = 0;
    long long rows = 0;
    for (const auto& point : points) {
        const RIParams p = params_at(c, point);
        for (double eps : c.epsilons) {
            for (auto m : c.metrics) {
                for (double v : point) out << io::format_double(v) << ',';
                out << io::format_double(eps) << ',' << metrics::to_string(m) << ',';
                try {
                    const auto rep = metrics::n_star_numeric(s0, p, eps, m, c.max_steps);
                    out << rep.n_star << ',' << io::format_double(rep.total_work) << '\n';
                } catch (const DegenerateParameters&) {
                    out << ",\n";
                    ++failed_degenerate;
                } catch (const NonConvergence&) {
                    out << ",\n";
                    ++failed_convergence;
                }
                ++rows;
            }
        }
    }
    RunResult r;
    r.summary = "sweep: " + std::to_string(rows) + " rows";
    if (failed_convergence > 0) {
        r.exit_code = kExitNonConvergence;
        r.summary += ", " + std::to_string(failed_convergence) + " did not converge within "
                     + std::to_string(c.max_steps) + " steps";
        r.error = error_json("non_convergence", r.summary);
    }
    if (failed_degenerate > 0) {
        if (r.exit_code == kExitOk) r.exit_code = kExitDegenerate;
        r.summary += ", " + std::to_string(failed_degenerate) + " degenerate (eta = 1) points left blank";
        if (!r.error) r.error = error_json("degenerate", r.summary);
    }
    return r;
}

std::string summary_path(const std::string& output_path) {
    std::filesystem::path p(output_path);
    p.replace_extension(".summary.json");
    return p.string();
}

} // namespace

std::string_view to_string(Kind k) {
    switch (k) {
    case Kind::simulate:
        return "simulate";
    case Kind::steady:
        return "steady";
    case Kind::resources:
        return "resources";
    case Kind::thermalize:
        return "thermalize";
    case Kind::sweep:
        return "sweep";
    }
    return "simulate";
}

Kind kind_from_string(std::string_view name) {
    for (Kind k : {Kind::simulate, Kind::steady, Kind::resources, Kind::thermalize, Kind::sweep}) {
        if (to_string(k) == name) return k;
    }
    throw ValidationError("kind", "unknown kind '" + std::string(name) + "'");
}

std::vector<double> GridAxis::samples() const {
    if (!values.empty()) return values;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(points, 0LL)));
    for (long long i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        if (log_scale) {
            out.push_back(std::exp(std::log(min) + t * (std::log(max) - std::log(min))));
        } else {
            out.push_back(min + t * (max - min));
        }
    }
    if (!out.empty()) out.back() = max;
    return out;
}

QubitState InitialState::resolve() const {
    if (state) return *state;
    if (seed) return random_state(*seed);
    throw ValidationError("initial_state", "\"random\" (a fresh state per run) is only valid for thermalize");
}

void validate(const ExperimentConfig& c) {
    if (c.schema_version != kSchemaVersion) {
        throw ValidationError("schema_version", "unsupported version " + std::to_string(c.schema_version));
    }
    try {
        ri::validate(c.params);
    } catch (const ContractViolation& e) {
        throw ValidationError("params", e.what());
    }
    if (c.initial_state.state && !c.initial_state.state->is_physical()) {
        throw ValidationError("initial_state", "not a valid density matrix");
    }
    if (c.initial_state.is_per_run() && c.kind != Kind::thermalize) {
        throw ValidationError("initial_state", "\"random\" (a fresh state per run) is only valid for thermalize");
    }
    if (c.n_steps < 0) throw ValidationError("n_steps", "must be >= 0");
    if (c.stride < 1) throw ValidationError("stride", "must be >= 1");
    if (c.max_steps < 0) throw ValidationError("max_steps", "must be >= 0");
    if (c.epsilons.empty()) throw ValidationError("epsilon", "at least one threshold is required");
    for (double e : c.epsilons) {
        if (!(e > 0.0) || !std::isfinite(e)) throw ValidationError("epsilon", "thresholds must be finite and > 0");
    }
    if (c.metrics.empty()) throw ValidationError("metric", "at least one metric is required");
    if (c.kind == Kind::resources && (c.epsilons.size() > 1 || c.metrics.size() > 1)) {
        throw ValidationError("epsilon", "resources takes a single epsilon and metric; use sweep for grids");
    }
    for (std::size_t i = 0; i < c.sweep_axes.size(); ++i) {
        const GridAxis& a = c.sweep_axes[i];
        RIParams scratch;
        param_slot(scratch, a.name);
        for (std::size_t k = 0; k < i; ++k) {
            if (c.sweep_axes[k].name == a.name) throw ValidationError("sweep_axes.name", "duplicate axis " + a.name);
        }
        const std::string field = "sweep_axes." + a.name;
        if (a.values.empty()) {
            if (a.points < 2) throw ValidationError(field + ".points", "grids need at least 2 points");
            if (!std::isfinite(a.min) || !std::isfinite(a.max) || !(a.min < a.max)) {
                throw ValidationError(field, "needs finite min < max");
            }
            if (a.log_scale && !(a.min > 0.0)) throw ValidationError(field + ".min", "log scale needs min > 0");
        } else if (a.values.size() < 2) {
            throw ValidationError(field + ".values", "grids need at least 2 points");
        }
        for (double v : a.samples()) {
            RIParams p = c.params;
            param_slot(p, a.name) = v;
            try {
                ri::validate(p);
            } catch (const ContractViolation& e) {
                throw ValidationError(field, e.what());
            }
        }
    }
    if ((c.kind == Kind::resources || c.kind == Kind::thermalize) && !c.sweep_axes.empty()) {
        throw ValidationError("sweep_axes", std::string(to_string(c.kind)) + " does not take sweep axes");
    }
    if (c.kind == Kind::thermalize) {
        try {
            protocols::validate(c.protocol);
        } catch (const ContractViolation& e) {
            throw ValidationError("protocol", e.what());
        }
        if (c.seeds < 1) throw ValidationError("protocol.seeds", "must be >= 1");
        if (!(c.threshold > 0.0)) throw ValidationError("protocol.threshold", "must be > 0");
    }
}

json to_json(const ExperimentConfig& c) {
    json j;
    j["schema_version"] = c.schema_version;
    j["kind"] = std::string(to_string(c.kind));
    if (!c.preset.empty()) j["preset"] = c.preset;
    j["params"] = io::to_json(c.params);
    if (c.initial_state.state) {
        j["initial_state"] = io::to_json(*c.initial_state.state);
    } else if (c.initial_state.seed) {
        j["initial_state"] = "random(" + std::to_string(*c.initial_state.seed) + ")";
    } else {
        j["initial_state"] = "random";
    }
    j["n_steps"] = c.n_steps;
    j["stride"] = c.stride;
    j["with_ledger"] = c.with_ledger;
    j["epsilon"] = c.epsilons;
    json ms = json::array();
    for (auto m : c.metrics) ms.push_back(std::string(metrics::to_string(m)));
    j["metric"] = ms;
    j["max_steps"] = c.max_steps;
    json axes = json::array();
    for (const auto& a : c.sweep_axes) {
        json ja{{"name", a.name}};
        if (!a.values.empty()) {
            ja["values"] = a.values;
        } else {
            ja["min"] = a.min;
            ja["max"] = a.max;
            ja["points"] = a.points;
            ja["scale"] = a.log_scale ? "log" : "linear";
        }
        axes.push_back(ja);
    }
    j["sweep_axes"] = axes;
    const auto& p = c.protocol;
    j["protocol"] = {{"omega_s", p.omega_s},
                     {"omega_a", p.omega_a},
                     {"j_max", p.j_max},
                     {"tau", p.tau},
                     {"n_max", p.n_max},
                     {"seed", p.seed},
                     {"beta", p.beta},
                     {"signed_draws", p.signed_draws},
                     {"randomize_jzz", p.randomize_jzz},
                     {"seeds", c.seeds},
                     {"threshold", c.threshold}};
    j["output_path"] = c.output_path;
    j["notes"] = c.notes;
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    static constexpr std::array<std::string_view, 15> kTop{
        "schema_version", "kind",      "preset",     "params",     "initial_state",
        "n_steps",        "stride",    "with_ledger", "epsilon",   "metric",
        "max_steps",      "sweep_axes", "protocol",  "output_path", "notes"};
    reject_unknown(j, kTop, "");
    ExperimentConfig c;
    c.schema_version = read<int>(j, "schema_version", "schema_version", kSchemaVersion);
    c.kind = kind_from_string(read<std::string>(j, "kind", "kind", "simulate"));
    c.preset = read<std::string>(j, "preset", "preset", "");
    if (j.contains("params")) c.params = io::params_from_json(j.at("params"));

    if (j.contains("initial_state")) {
        const json& s = j.at("initial_state");
        if (s.is_string()) {
            const auto text = s.get<std::string>();
            if (text == "random") {
                c.initial_state = InitialState::per_run();
            } else if (text.starts_with("random(") && text.ends_with(")") && text.size() > 8) {
                const std::string digits = text.substr(7, text.size() - 8);
                if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
                    throw ValidationError("initial_state", "expected random(<unsigned seed>)");
                }
                try {
                    c.initial_state = InitialState::random(std::stoull(digits));
                } catch (const std::exception&) {
                    throw ValidationError("initial_state", "seed out of range");
                }
            } else {
                throw ValidationError("initial_state", "expected an object, \"random\" or \"random(<seed>)\"");
            }
        } else {
            c.initial_state = InitialState::fixed(io::state_from_json(s));
        }
    }
    c.n_steps = read<long long>(j, "n_steps", "n_steps", c.n_steps);
    c.stride = read<long long>(j, "stride", "stride", c.stride);
    c.with_ledger = read<bool>(j, "with_ledger", "with_ledger", c.with_ledger);
    if (j.contains("epsilon")) {
        const json& e = j.at("epsilon");
        c.epsilons = e.is_array() ? read<std::vector<double>>(j, "epsilon", "epsilon", {})
                                  : std::vector<double>{read<double>(j, "epsilon", "epsilon", 0.0)};
    }
    if (j.contains("metric")) {
        const json& m = j.at("metric");
        const auto names = m.is_array() ? read<std::vector<std::string>>(j, "metric", "metric", {})
                                        : std::vector<std::string>{read<std::string>(j, "metric", "metric", "")};
        c.metrics.clear();
        for (const auto& n : names) c.metrics.push_back(metrics::metric_from_string(n));
    }
    c.max_steps = read<long long>(j, "max_steps", "max_steps", c.max_steps);
    if (j.contains("sweep_axes")) {
        const json& axes = j.at("sweep_axes");
        if (!axes.is_array()) throw ValidationError("sweep_axes", "expected an array");
        static constexpr std::array<std::string_view, 6> kAxis{"name", "values", "min", "max", "points", "scale"};
        for (const auto& ja : axes) {
            reject_unknown(ja, kAxis, "sweep_axes");
            GridAxis a;
            a.name = read<std::string>(ja, "name", "sweep_axes.name", "");
            if (std::find(kParamFields.begin(), kParamFields.end(), a.name) == kParamFields.end()) {
                throw ValidationError("sweep_axes.name", "'" + a.name + "' is not an RIParams field");
            }
            const std::string field = "sweep_axes." + a.name;
            a.values = read<std::vector<double>>(ja, "values", field + ".values", {});
            a.min = read<double>(ja, "min", field + ".min", 0.0);
            a.max = read<double>(ja, "max", field + ".max", 0.0);
            a.points = read<long long>(ja, "points", field + ".points", 0);
            const auto scale = read<std::string>(ja, "scale", field + ".scale", "linear");
            if (scale != "linear" && scale != "log") throw ValidationError(field + ".scale", "expected linear or log");
            a.log_scale = scale == "log";
            c.sweep_axes.push_back(std::move(a));
        }
    }
    if (j.contains("protocol")) {
        const json& jp = j.at("protocol");
        static constexpr std::array<std::string_view, 11> kProtocol{
            "omega_s", "omega_a", "j_max",         "tau",   "n_max",    "seed",
            "beta",    "signed_draws", "randomize_jzz", "seeds", "threshold"};
        reject_unknown(jp, kProtocol, "protocol");
        auto& p = c.protocol;
        p.omega_s = read<double>(jp, "omega_s", "protocol.omega_s", p.omega_s);
        p.omega_a = read<double>(jp, "omega_a", "protocol.omega_a", p.omega_a);
        p.j_max = read<double>(jp, "j_max", "protocol.j_max", p.j_max);
        p.tau = read<double>(jp, "tau", "protocol.tau", p.tau);
        p.n_max = read<long long>(jp, "n_max", "protocol.n_max", p.n_max);
        p.seed = read<std::uint64_t>(jp, "seed", "protocol.seed", p.seed);
        p.beta = read<double>(jp, "beta", "protocol.beta", p.beta);
        p.signed_draws = read<bool>(jp, "signed_draws", "protocol.signed_draws", p.signed_draws);
        p.randomize_jzz = read<bool>(jp, "randomize_jzz", "protocol.randomize_jzz", p.randomize_jzz);
        c.seeds = read<long long>(jp, "seeds", "protocol.seeds", c.seeds);
        c.threshold = read<double>(jp, "threshold", "protocol.threshold", c.threshold);
    }
    c.output_path = read<std::string>(j, "output_path", "output_path", "");
    c.notes = read<std::vector<std::string>>(j, "notes", "notes", {});
    validate(c);
    return c;
}

std::vector<std::string> preset_ids() {
    return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11"};
}

ExperimentConfig preset(std::string_view id) {
    using metrics::Metric;
    const std::vector<double> betas{0.001, 0.1, 0.5, 1.0, 10.0};
    const std::vector<double> eps_grid{0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001};
    const QubitState coherent{0.627, {0.459, -0.152}};

    ExperimentConfig c;
    c.preset = std::string(id);
    c.params = RIParams{1.0, 2.0, 2.0, 1.0, 0.0, 1.0, 0.01};
    const std::string given = "given: omega_a = 2, omega_s = 1, j_xx = 2, j_yy = 1";

    if (id == "fig2") {
        c.kind = Kind::simulate;
        c.initial_state = InitialState::random(2);
        c.n_steps = 1'000'000;
        c.stride = 1000;
        c.with_ledger = false;
        c.sweep_axes = {GridAxis{"tau", {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0}}};
        c.notes = {given + ", j_zz = 0, beta = 1, 1e6 steps, tau ladder 1e-3 ... 1e2",
                   "chosen: the random initial state is fixed to random(2)",
                   "row n = 0 holds the initial state, one collision earlier than an n = 1 labelling"};
    } else if (id == "fig3") {
        c.kind = Kind::steady;
        c.params = RIParams{1.0, 1.0, 0.0, 0.0, 0.0, std::log(4.0), 0.01};
        c.sweep_axes = {GridAxis{"j_xx", {}, -3.0, 3.0, 61, false}, GridAxis{"j_yy", {}, -3.0, 3.0, 61, false}};
        c.notes = {"given: tau = 0.01, omega_a = omega_s = 1, p_a = 0.8 (beta = ln 4)",
                   "chosen: coupling range [-3, 3] and 61 points per axis"};
    } else if (id == "fig4") {
        c.kind = Kind::simulate;
        c.initial_state = InitialState::fixed(coherent);
        c.n_steps = 10'000;
        c.stride = 10;
        c.with_ledger = false;
        c.sweep_axes = {GridAxis{"j_zz", {0.0, 4.0}}, GridAxis{"beta", {0.01, 1.0}}};
        c.notes = {given + ", tau = 0.01, j_zz in {0, 4}, beta in {0.01, 1}",
                   "chosen: the coherent initial state p = 0.627, c = 0.459 - 0.152i, "
                   "shared with the energetics presets",
                   "chosen: 1e4 steps"};
    } else if (id == "fig5") {
        c.kind = Kind::sweep;
        c.initial_state = InitialState::fixed(QubitState{0.866, {0.0, 0.0}});
        c.epsilons = eps_grid;
        c.metrics = {Metric::trace_distance, Metric::infidelity};
        c.sweep_axes = {GridAxis{"beta", betas}};
        c.notes = {given + ", j_zz = 0, tau = 0.01, diagonal p0 = 0.866, beta in {0.001, 0.1, 0.5, 1, 10}",
                   "chosen: the epsilon grid"};
    } else if (id == "fig6") {
        c.kind = Kind::simulate;
        c.params.j_zz = 4.0;
        c.initial_state = InitialState::fixed(coherent);
        c.n_steps = 10'000;
        c.stride = 10;
        c.notes = {given + ", j_zz = 4, tau = 0.01, beta = 1, p0 = 0.627, c0 = 0.459 - 0.152i",
                   "chosen: 1e4 steps"};
    } else if (id == "fig7") {
        c.kind = Kind::thermalize;
        c.params = RIParams{2.0, 2.0, 0.0, 0.0, 0.0, 1.0, 100.0};
        c.initial_state = InitialState::per_run();
        c.protocol = protocols::ProtocolConfig::shared_frequency(2.0, 0.01, 100.0, 10, 0, 1.0);
        c.seeds = 100;
        c.notes = {"given: omega_a = omega_s = 2, j_xx and j_yy drawn from U(0, 0.01) per collision, "
                   "tau = 100",
                   "chosen: beta = 1, 10 collisions, 100 seeds, one random coherent initial state per seed"};
    } else if (id == "fig8" || id == "fig11") {
        c.kind = Kind::sweep;
        if (id == "fig11") c.params.j_zz = 4.0;
        c.initial_state = InitialState::fixed(coherent);
        c.epsilons = eps_grid;
        c.metrics = {Metric::trace_distance, Metric::infidelity};
        c.sweep_axes = {GridAxis{"beta", betas}};
        c.notes = {given + (id == "fig11" ? ", j_zz = 4" : ", j_zz = 0")
                       + ", tau = 0.01, p0 = 0.627, c0 = 0.459 - 0.152i, beta in {0.001, 0.1, 0.5, 1, 10}",
                   "chosen: the epsilon grid"};
    } else if (id == "fig9") {
        c.kind = Kind::simulate;
        c.initial_state = InitialState::fixed(QubitState{0.866, {0.0, 0.0}});
        c.n_steps = 5000;
        c.epsilons = {0.022};
        c.sweep_axes = {GridAxis{"beta", {0.001, 0.5, 10.0}}};
        c.notes = {given + ", j_zz = 0, tau = 0.01, diagonal p0 = 0.866, beta in {0.001, 0.5, 10}, epsilon = 0.022",
                   "chosen: 5000 steps; n* for epsilon = 0.022 comes from the sweep kind"};
    } else if (id == "fig10") {
        c.kind = Kind::sweep;
        c.params = RIParams{1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.01};
        c.initial_state = InitialState::fixed(QubitState{0.866, {0.0, 0.0}});
        c.epsilons = {0.05};
        c.metrics = {Metric::trace_distance};
        c.sweep_axes = {GridAxis{"j_xx", {}, -3.0, 3.0, 24, false}, GridAxis{"j_yy", {}, -3.0, 3.0, 24, false}};
        c.notes = {"given: omega_a = omega_s = 1, tau = 0.01, beta = 1, epsilon = 0.05, trace metric",
                   "chosen: diagonal p0 = 0.866",
                   "chosen: 24 points per axis, which avoids the decoupled point j_xx = j_yy = 0"};
    } else {
        throw ValidationError("preset", "unknown preset '" + std::string(id) + "'");
    }
    validate(c);
    return c;
}

RunResult run(const ExperimentConfig& config, std::ostream& out) {
    try {
        validate(config);
        switch (config.kind) {
        case Kind::simulate:
            return run_simulate(config, out);
        case Kind::steady:
            return run_steady(config, out);
        case Kind::resources:
            return run_resources(config, out);
        case Kind::thermalize:
            return run_thermalize(config, out);
        case Kind::sweep:
            return run_sweep(config, out);
        }
        return fail(kExitValidation, error_json("validation", "unknown kind"));
    } catch (const ValidationError& e) {
        json err = error_json("validation", e.what());
        err["field"] = e.field();
        return fail(kExitValidation, err);
    } catch (const ContractViolation& e) {
        return fail(kExitValidation, error_json("validation", e.what()));
    } catch (const DegenerateParameters&) {
        return fail(kExitDegenerate, error_json("degenerate", resonance_message(config.params)));
    } catch (const NonConvergence& e) {
        json err = error_json("non_convergence", e.what());
        err["best_distance"] = e.best_distance();
        err["steps"] = e.steps();
        return fail(kExitNonConvergence, err);
    }
}

RunResult run(const ExperimentConfig& config) {
    if (config.output_path.empty()) {
        std::ostringstream sink;
        RunResult r = run(config, sink);
        return r;
    }
    std::ofstream file(config.output_path);
    if (!file) {
        return fail(kExitValidation, json{{"error", "validation"},
                                          {"field", "output_path"},
                                          {"message", "cannot open " + config.output_path}});
    }
    RunResult r = run(config, file);
    if (r.report) {
        std::ofstream summary(summary_path(config.output_path));
        summary << r.report->dump(2) << '\n';
    }
    return r;
}

} // namespace ri::experiment
