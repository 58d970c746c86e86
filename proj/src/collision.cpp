// collision.cpp — Block-exponentiated collision unitary and trajectory iteration

#include "ri/collision.hpp"

#include <algorithm>
#include <string>

#include "ri/errors.hpp"

namespace ri {

namespace {

constexpr int kOuter[2] = {0, 3};
constexpr int kCenter[2] = {1, 2};

linalg::C2Matrix block(const linalg::C4Matrix& m, const int (&idx)[2]) {
    linalg::C2Matrix b;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) b(i, j) = m(idx[i], idx[j]);
    return b;
}

void scatter(linalg::C4Matrix& m, const linalg::C2Matrix& b, const int (&idx)[2]) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(idx[i], idx[j]) = b(i, j);
}

linalg::C4Matrix product_state(const QubitState& system, const QubitState& ancilla) {
    return linalg::kron(system.matrix(), ancilla.matrix());
}

linalg::C4Matrix evolve(const linalg::C4Matrix& u, const linalg::C4Matrix& rho) {
    return u * rho * u.adjoint();
}

} // namespace

CollisionUnitary::CollisionUnitary(const RIParams& params)
    : params_(params), fingerprint_(fingerprint(params)) {
    validate(params);
    const linalg::C4Matrix h = total_hamiltonian(params);
    u_.setZero();
    scatter(u_, linalg::exp_2x2_hermitian(block(h, kOuter), params.tau), kOuter);
    scatter(u_, linalg::exp_2x2_hermitian(block(h, kCenter), params.tau), kCenter);
}

void CollisionUnitary::check_built_from(const RIParams& params) const {
    if (fingerprint(params) != fingerprint_ || !(params == params_)) {
        throw ContractViolation("CollisionUnitary: built from different parameters");
    }
}

CollisionUnitary collision_unitary(const RIParams& params) { return CollisionUnitary(params); }

QubitState ri_step(const QubitState& state, const CollisionUnitary& u, const QubitState& ancilla) {
    if (!state.is_physical()) throw ContractViolation("ri_step: system state is not physical");
    if (!ancilla.is_physical() || !ancilla.is_diagonal()) {
        throw ContractViolation("ri_step: ancilla must be a physical diagonal state");
    }
    const auto rho = evolve(u.matrix(), product_state(state, ancilla));
    const auto out = QubitState::from_matrix(linalg::partial_trace_ancilla_unchecked(rho));
    if (!out.is_physical()) {
        throw InternalConsistencyError("ri_step: collision produced a non-positive state");
    }
    return out;
}

CollisionChannel collision_channel(const CollisionUnitary& u, const QubitState& ancilla) {
    if (!ancilla.is_physical() || !ancilla.is_diagonal()) {
        throw ContractViolation("collision_channel: ancilla must be a physical diagonal state");
    }
    const linalg::C2Matrix rho_a = ancilla.matrix();
    auto push = [&](int i, int j) {
        linalg::C2Matrix e = linalg::C2Matrix::Zero();
        e(i, j) = 1.0;
        return linalg::partial_trace_ancilla_unchecked(evolve(u.matrix(), linalg::kron(e, rho_a)));
    };
    const auto ground = push(0, 0);
    const auto excited = push(1, 1);
    const auto raise = push(0, 1);
    const auto lower = push(1, 0);

    CollisionChannel ch;
    ch.population_offset = excited(0, 0).real();
    ch.population_slope = ground(0, 0).real() - excited(0, 0).real();
    ch.coherence_direct = raise(0, 1);
    ch.coherence_conjugate = lower(0, 1);
    return ch;
}

StepLedger EnergyProbe::evaluate(const QubitState& state, const QubitState& ancilla) const {
    const auto rho = product_state(state, ancilla);
    StepLedger l;
    l.w = linalg::trace_product(d_interaction, rho);
    l.q = linalg::trace_product(d_ancilla, rho);
    l.de_s = linalg::trace_product(d_system, rho);
    l.residual = l.w + l.q + l.de_s;
    return l;
}

EnergyProbe energy_probe(const CollisionUnitary& u) {
    const auto& m = u.matrix();
    auto heisenberg = [&](const linalg::C4Matrix& x) -> linalg::C4Matrix {
        return m.adjoint() * x * m - x;
    };
    return {heisenberg(interaction_hamiltonian(u.params())),
            heisenberg(ancilla_hamiltonian(u.params())),
            heisenberg(system_hamiltonian(u.params()))};
}

TrajectoryRecord run_trajectory(const QubitState& state0, const RIParams& params, long long n_steps,
                                const TrajectoryOptions& options) {
    if (n_steps < 0) throw ContractViolation("run_trajectory: n_steps must be >= 0");
    if (options.stride < 1) throw ContractViolation("run_trajectory: stride must be >= 1");
    if (!state0.is_physical()) throw ContractViolation("run_trajectory: initial state is not physical");

    const CollisionUnitary u(params);
    const QubitState ancilla = thermal_ancilla(params.beta, params.omega_a);
    const CollisionChannel channel = collision_channel(u, ancilla);
    const EnergyProbe probe = options.with_ledger ? energy_probe(u) : EnergyProbe{};

    TrajectoryRecord rec;
    rec.params = params;
    rec.n_steps = n_steps;
    const auto kept = static_cast<std::size_t>(n_steps / options.stride + 2);
    rec.n.reserve(kept);
    rec.states.reserve(kept);
    rec.n.push_back(0);
    rec.states.push_back(state0);
    if (options.with_ledger) {
        rec.ledgers.reserve(kept);
        rec.invested_work.reserve(kept);
        rec.invested_work.push_back(0.0);
    }

    QubitState s = state0;
    double invested = 0.0;
    for (long long k = 1; k <= n_steps; ++k) {
        StepLedger ledger;
        if (options.with_ledger) {
            ledger = probe.evaluate(s, ancilla);
            if (std::abs(ledger.residual) > kFirstLawTol) {
                throw InternalConsistencyError("run_trajectory: first-law residual "
                                               + std::to_string(ledger.residual) + " at step "
                                               + std::to_string(k));
            }
            invested -= ledger.w;
        }
        s = channel.apply(s);
        if (!s.is_physical()) {
            throw InternalConsistencyError("run_trajectory: state left the Bloch ball at step "
                                           + std::to_string(k));
        }
        if (k % options.stride == 0 || k == n_steps) {
            rec.n.push_back(k);
            rec.states.push_back(s);
            if (options.with_ledger) {
                rec.ledgers.push_back(ledger);
                rec.invested_work.push_back(invested);
            }
        }
    }
    return rec;
}

} // namespace ri
