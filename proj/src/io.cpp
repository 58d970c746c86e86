// io.cpp — JSON and CSV serialization

#include "ri/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include "ri/errors.hpp"

namespace ri::io {

namespace {

// Non-finite values have no JSON literal; they travel as strings.
json number(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

double read_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw ValidationError(field, "expected a number");
    return j.get<double>();
}

template <class Fields>
void reject_unknown(const json& j, const Fields& known, const std::string& what) {
    if (!j.is_object()) throw ValidationError(what, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool found = false;
        for (const auto& k : known) found = found || key == k;
        if (!found) throw ValidationError(what + "." + key, "unknown field");
    }
}

void write_prefix(std::ostream& os, const Prefix& prefix) {
    for (double v : prefix.values) os << format_double(v) << ',';
}

} // namespace

std::string format_double(double x) {
    std::array<char, 40> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
    return {buf.data(), res.ptr};
}

json to_json(const RIParams& p) {
    return {{"omega_s", p.omega_s}, {"omega_a", p.omega_a}, {"j_xx", p.j_xx}, {"j_yy", p.j_yy},
            {"j_zz", p.j_zz},       {"beta", p.beta},       {"tau", p.tau}};
}

RIParams params_from_json(const json& j) {
    static constexpr std::array<const char*, 7> kFields{"omega_s", "omega_a", "j_xx", "j_yy",
                                                        "j_zz",    "beta",    "tau"};
    reject_unknown(j, kFields, "params");
    RIParams p;
    const auto get = [&](const char* name, double& slot) {
        if (j.contains(name)) slot = read_number(j.at(name), std::string("params.") + name);
    };
    get("omega_s", p.omega_s);
    get("omega_a", p.omega_a);
    get("j_xx", p.j_xx);
    get("j_yy", p.j_yy);
    get("j_zz", p.j_zz);
    get("beta", p.beta);
    get("tau", p.tau);
    return p;
}

json to_json(const QubitState& s) { return {{"p", s.p}, {"c_re", s.c.real()}, {"c_im", s.c.imag()}}; }

QubitState state_from_json(const json& j) {
    static constexpr std::array<const char*, 3> kFields{"p", "c_re", "c_im"};
    reject_unknown(j, kFields, "initial_state");
    if (!j.contains("p")) throw ValidationError("initial_state.p", "missing");
    QubitState s;
    s.p = read_number(j.at("p"), "initial_state.p");
    const double re = j.contains("c_re") ? read_number(j.at("c_re"), "initial_state.c_re") : 0.0;
    const double im = j.contains("c_im") ? read_number(j.at("c_im"), "initial_state.c_im") : 0.0;
    s.c = {re, im};
    if (!s.is_physical()) throw ValidationError("initial_state", "not a valid density matrix");
    return s;
}

json to_json(const analytic::RelaxationSummary& s) {
    json j{{"eta", s.eta},      {"theta", s.theta},           {"phi", s.phi},
           {"degenerate", s.degenerate}, {"p_a", s.p_a}};
    j["p_inf"] = s.p_inf ? json(*s.p_inf) : json(nullptr);
    j["p_inf_short_tau"] = s.p_inf_short_tau ? json(*s.p_inf_short_tau) : json(nullptr);
    j["beta_s_inf"] = s.beta_s_inf ? number(*s.beta_s_inf) : json(nullptr);
    return j;
}

json to_json(const metrics::ConvergenceReport& r, const thermo::Housekeeping& h) {
    return {{"n_star", r.n_star},
            {"total_work", r.total_work},
            {"w_inf", h.w_inf},
            {"q_inf", h.q_inf},
            {"metric", std::string(metrics::to_string(r.metric))},
            {"epsilon", r.epsilon},
            {"achieved_distance", r.achieved_distance}};
}

json to_json(const protocols::EnsembleSummary& s) {
    json j{{"seeds_run", s.seeds_run},
           {"success_fraction", s.success_fraction},
           {"threshold", s.threshold},
           {"generator", s.generator},
           {"n_to_threshold", s.n_to_threshold}};
    j["median_n_to_threshold"] = s.median_n_to_threshold ? json(*s.median_n_to_threshold) : json(nullptr);
    return j;
}

void write_trajectory_header(std::ostream& os, bool with_ledger, const Prefix& prefix, bool with_draws) {
    for (const auto& name : prefix.names) os << name << ',';
    os << "n,p,c_re,c_im";
    if (with_ledger) os << ",w,q,de,first_law_residual";
    if (with_draws) os << ",j_xx,j_yy,j_zz";
    os << '\n';
}

void write_trajectory_rows(std::ostream& os, const TrajectoryRecord& rec, const Prefix& prefix) {
    const bool ledger = rec.has_ledger();
    const bool draws = !rec.draws.empty();
    for (std::size_t i = 0; i < rec.states.size(); ++i) {
        const QubitState& s = rec.states[i];
        write_prefix(os, prefix);
        os << rec.n[i] << ',' << format_double(s.p) << ',' << format_double(s.c.real()) << ','
           << format_double(s.c.imag());
        if (ledger) {
            if (i == 0) {
                os << ",,,,";
            } else {
                const StepLedger& l = rec.ledgers[i - 1];
                os << ',' << format_double(l.w) << ',' << format_double(l.q) << ',' << format_double(l.de_s)
                   << ',' << format_double(l.residual);
            }
        }
        if (draws) {
            if (i == 0) {
                os << ",,,";
            } else {
                // Randomized runs keep every state, so draw i-1 produced state i.
                const CouplingDraw& d = rec.draws[i - 1];
                os << ',' << format_double(d.j_xx) << ',' << format_double(d.j_yy) << ','
                   << format_double(d.j_zz);
            }
        }
        os << '\n';
    }
}

} // namespace ri::io
