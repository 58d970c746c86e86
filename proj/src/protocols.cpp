// protocols.cpp — Randomized long-collision thermalization

#include "ri/protocols.hpp"

#include <algorithm>
#include <cmath>

#include "ri/analytic.hpp"
#include "ri/errors.hpp"
#include "ri/metrics.hpp"
#include "ri/random.hpp"

namespace ri::protocols {

namespace {

RIParams base_params(const ProtocolConfig& c) {
    RIParams p;
    p.omega_s = c.omega_s;
    p.omega_a = c.omega_a;
    p.beta = c.beta;
    p.tau = c.tau;
    return p;
}

// Independent sub-streams of one user seed.
constexpr std::uint64_t kCouplingStream = 1;
constexpr std::uint64_t kStateStream = 2;

} // namespace

void validate(const ProtocolConfig& c) {
    if (!(c.omega_s > 0.0) || !(c.omega_a > 0.0)) {
        throw ContractViolation("ProtocolConfig: frequencies must be > 0");
    }
    if (!(c.j_max > 0.0)) throw ContractViolation("ProtocolConfig.j_max must be > 0");
    if (!(c.tau > 0.0)) throw ContractViolation("ProtocolConfig.tau must be > 0");
    if (c.n_max < 0) throw ContractViolation("ProtocolConfig.n_max must be >= 0");
    if (!(c.beta >= 0.0) || !std::isfinite(c.beta)) {
        throw ContractViolation("ProtocolConfig.beta must be finite and >= 0");
    }
}

TrajectoryRecord randomized_thermalization(const QubitState& state0, const ProtocolConfig& config) {
    validate(config);
    if (!state0.is_physical()) {
        throw ContractViolation("randomized_thermalization: initial state is not physical");
    }
    SeededGenerator gen(derive_seed(config.seed, kCouplingStream));
    const double lo = config.signed_draws ? -config.j_max : 0.0;
    const QubitState ancilla = thermal_ancilla(config.beta, config.omega_a);

    TrajectoryRecord rec;
    rec.params = base_params(config);
    rec.n_steps = config.n_max;
    rec.n.push_back(0);
    rec.states.push_back(state0);
    rec.invested_work.push_back(0.0);

    QubitState s = state0;
    double invested = 0.0;
    for (long long k = 1; k <= config.n_max; ++k) {
        CouplingDraw draw{};
        draw.j_xx = gen.uniform(lo, config.j_max);
        draw.j_yy = gen.uniform(lo, config.j_max);
        if (config.randomize_jzz) draw.j_zz = gen.uniform(lo, config.j_max);

        RIParams p = rec.params;
        p.j_xx = draw.j_xx;
        p.j_yy = draw.j_yy;
        p.j_zz = draw.j_zz;
        const CollisionUnitary u(p);
        const StepLedger ledger = energy_probe(u).evaluate(s, ancilla);
        if (std::abs(ledger.residual) > kFirstLawTol) {
            throw InternalConsistencyError("randomized_thermalization: first-law residual exceeded");
        }
        s = ri_step(s, u, ancilla);
        invested -= ledger.w;

        rec.n.push_back(k);
        rec.states.push_back(s);
        rec.ledgers.push_back(ledger);
        rec.invested_work.push_back(invested);
        rec.draws.push_back(draw);
    }
    return rec;
}

RegimeDiagnostics regime_diagnostics(const ProtocolConfig& config) {
    validate(config);
    RIParams p = base_params(config);
    p.j_xx = config.j_max;
    p.j_yy = config.j_max;

    RegimeDiagnostics d{};
    const auto [theta, phi] = theta_phi(p);
    d.theta_over_phi = theta / phi;
    d.j_tau = config.j_max * config.tau;
    d.eta_at_j_max = analytic::eta(p);

    constexpr int kGrid = 21;
    const double lo = config.signed_draws ? -config.j_max : 0.0;
    d.eta_min = 1.0;
    d.eta_max = -1.0;
    double total = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
            p.j_xx = lo + (config.j_max - lo) * i / (kGrid - 1);
            p.j_yy = lo + (config.j_max - lo) * j / (kGrid - 1);
            const double e = analytic::eta(p);
            d.eta_min = std::min(d.eta_min, e);
            d.eta_max = std::max(d.eta_max, e);
            total += e;
        }
    }
    d.eta_mean = total / (kGrid * kGrid);

    if (config.omega_s != config.omega_a) {
        d.warnings.emplace_back("omega_s != omega_a: the system and ancilla must share one frequency");
    }
    const double omega = std::min(config.omega_s, config.omega_a);
    if (config.j_max > omega / 10.0) {
        d.warnings.emplace_back("j_max > omega/10: couplings are not weak relative to the splitting");
    }
    if (d.j_tau < 0.1 || d.j_tau > 10.0) {
        d.warnings.emplace_back("j_max*tau outside [0.1, 10]: collision is not in the J*tau ~ 1 regime");
    }
    if (config.signed_draws) {
        d.warnings.emplace_back("signed coupling draws enabled (exploratory, not the reference protocol)");
    }
    if (config.randomize_jzz) {
        d.warnings.emplace_back("randomized j_zz enabled (experimental)");
    }
    return d;
}

QubitState ensemble_initial_state(std::uint64_t seed) {
    return random_state(derive_seed(seed, kStateStream));
}

EnsembleSummary thermalization_ensemble(const ProtocolConfig& config, long long seeds, double threshold,
                                        const std::optional<QubitState>& state0) {
    validate(config);
    if (seeds < 1) throw ContractViolation("thermalization_ensemble: need at least one seed");
    if (!(threshold > 0.0)) throw ContractViolation("thermalization_ensemble: threshold must be > 0");

    const QubitState target = thermal_ancilla(config.beta, config.omega_a);
    EnsembleSummary out;
    out.seeds_run = seeds;
    out.threshold = threshold;
    out.generator = std::string(SeededGenerator::kAlgorithm);
    out.n_to_threshold.reserve(static_cast<std::size_t>(seeds));

    std::vector<double> hits;
    for (long long i = 0; i < seeds; ++i) {
        ProtocolConfig c = config;
        c.seed = config.seed + static_cast<std::uint64_t>(i);
        const QubitState initial = state0 ? *state0 : ensemble_initial_state(c.seed);
        const auto rec = randomized_thermalization(initial, c);
        long long hit = -1;
        for (std::size_t k = 0; k < rec.states.size(); ++k) {
            if (metrics::trace_distance(rec.states[k], target) < threshold) {
                hit = rec.n[k];
                break;
            }
        }
        out.n_to_threshold.push_back(hit);
        if (hit >= 0) hits.push_back(static_cast<double>(hit));
    }
    out.success_fraction = static_cast<double>(hits.size()) / static_cast<double>(seeds);
    if (!hits.empty()) {
        std::sort(hits.begin(), hits.end());
        const std::size_t m = hits.size() / 2;
        out.median_n_to_threshold = hits.size() % 2 ? hits[m] : 0.5 * (hits[m - 1] + hits[m]);
    }
    return out;
}

} // namespace ri::protocols
