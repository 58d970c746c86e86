// thermo.cpp — Energetics of one collision and of whole trajectories

#include "ri/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ri/analytic.hpp"
#include "ri/errors.hpp"

namespace ri::thermo {

StepLedger step_energetics_numeric(const QubitState& state, const RIParams& params,
                                   const CollisionUnitary& u) {
    u.check_built_from(params);
    if (!state.is_physical()) {
        throw ContractViolation("step_energetics_numeric: state is not physical");
    }
    const auto ledger = energy_probe(u).evaluate(state, thermal_ancilla(params.beta, params.omega_a));
    if (std::abs(ledger.residual) > kFirstLawTol) {
        throw InternalConsistencyError("step_energetics_numeric: first-law residual "
                                       + std::to_string(ledger.residual));
    }
    return ledger;
}

StepLedger step_energetics_closed(const QubitState& state, const RIParams& params) {
    const auto t = analytic::relaxation_terms(params);
    const double p_a = thermal_ancilla(params.beta, params.omega_a).p;
    const double toward_ancilla = state.p - p_a;          // swap channel (one excitation)
    const double toward_inverted = state.p - (1.0 - p_a); // pair channel (zero or two)

    StepLedger l;
    l.w = (params.omega_a - params.omega_s) * t.m_theta * toward_ancilla
        - (params.omega_a + params.omega_s) * t.m_phi * toward_inverted;
    l.q = params.omega_a * (-t.m_theta * toward_ancilla + t.m_phi * toward_inverted);
    l.de_s = params.omega_s * (t.m_theta * toward_ancilla + t.m_phi * toward_inverted);
    l.residual = l.w + l.q + l.de_s;
    return l;
}

double cumulative_work(const TrajectoryRecord& trajectory, long long n_stop) {
    if (!trajectory.has_ledger()) {
        throw ContractViolation("cumulative_work: trajectory carries no ledger");
    }
    if (n_stop < 0 || n_stop > trajectory.n_steps) {
        throw ContractViolation("cumulative_work: n_stop outside [0, n_steps]");
    }
    const auto it = std::lower_bound(trajectory.n.begin(), trajectory.n.end(), n_stop);
    if (it == trajectory.n.end() || *it != n_stop) {
        throw ContractViolation("cumulative_work: n_stop was not recorded (check stride)");
    }
    return trajectory.invested_work[static_cast<std::size_t>(it - trajectory.n.begin())];
}

Housekeeping asymptotic_housekeeping(const RIParams& params) {
    const double p_inf = analytic::steady_population(params);
    const auto l = step_energetics_closed(QubitState::diagonal(p_inf), params);
    return {l.w, l.q};
}

EnergyCoefficients energy_coefficients(const RIParams& params) {
    const auto t = analytic::relaxation_terms(params);
    return {params.omega_s * t.m_theta, params.omega_s * t.m_phi};
}

double system_energy_change(long long n, double p0, const RIParams& params) {
    const auto [a, b] = energy_coefficients(params);
    const double p_inf = analytic::steady_population(params);
    return (a + b) * std::pow(analytic::eta(params), static_cast<double>(n)) * (p0 - p_inf);
}

} // namespace ri::thermo
