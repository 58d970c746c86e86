// model.cpp — Parameter validation, Hamiltonian builders and thermal states

#include "ri/model.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "ri/errors.hpp"

namespace ri {

namespace {

void require_finite(double value, const char* field) {
    if (!std::isfinite(value)) {
        throw ContractViolation(std::string("RIParams.") + field + " must be finite");
    }
}

} // namespace

void validate(const RIParams& params) {
    require_finite(params.omega_s, "omega_s");
    require_finite(params.omega_a, "omega_a");
    require_finite(params.j_xx, "j_xx");
    require_finite(params.j_yy, "j_yy");
    require_finite(params.j_zz, "j_zz");
    require_finite(params.beta, "beta");
    require_finite(params.tau, "tau");
    if (params.omega_s <= 0.0) throw ContractViolation("RIParams.omega_s must be > 0");
    if (params.omega_a <= 0.0) throw ContractViolation("RIParams.omega_a must be > 0");
    if (params.tau <= 0.0) throw ContractViolation("RIParams.tau must be > 0");
    if (params.beta < 0.0) throw ContractViolation("RIParams.beta must be >= 0");
}

std::uint64_t fingerprint(const RIParams& params) {
    std::uint64_t h = 14695981039346656037ULL;
    const double fields[] = {params.omega_s, params.omega_a, params.j_xx, params.j_yy,
                             params.j_zz,    params.beta,    params.tau};
    for (double f : fields) {
        auto bits = std::bit_cast<std::uint64_t>(f);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffU;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

bool QubitState::is_physical(double tol) const {
    if (!std::isfinite(p) || !std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    if (p < -tol || p > 1.0 + tol) return false;
    return std::norm(c) <= p * (1.0 - p) + tol;
}

linalg::C2Matrix QubitState::matrix() const {
    linalg::C2Matrix m;
    m << Complex(p, 0.0), c, std::conj(c), Complex(1.0 - p, 0.0);
    return m;
}

QubitState QubitState::from_matrix(const linalg::C2Matrix& m) {
    return {m(0, 0).real(), m(0, 1)};
}

QubitState thermal_ancilla(double beta, double omega_a) {
    if (!(omega_a > 0.0) || !std::isfinite(omega_a)) {
        throw ContractViolation("thermal_ancilla: omega_a must be finite and > 0");
    }
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw ContractViolation("thermal_ancilla: beta must be finite and >= 0");
    }
    // 1/(1+e^{-x}) is stable for x >= 0.
    return QubitState::diagonal(1.0 / (1.0 + std::exp(-beta * omega_a)));
}

linalg::C4Matrix system_hamiltonian(const RIParams& params) {
    using linalg::Axis;
    const linalg::C2Matrix hs = -0.5 * params.omega_s * linalg::pauli(Axis::z);
    return linalg::kron(hs, linalg::pauli(Axis::id));
}

linalg::C4Matrix ancilla_hamiltonian(const RIParams& params) {
    using linalg::Axis;
    const linalg::C2Matrix ha = -0.5 * params.omega_a * linalg::pauli(Axis::z);
    return linalg::kron(linalg::pauli(Axis::id), ha);
}

linalg::C4Matrix interaction_hamiltonian(const RIParams& params) {
    using linalg::Axis;
    using linalg::kron;
    using linalg::pauli;
    return params.j_xx * kron(pauli(Axis::x), pauli(Axis::x))
         + params.j_yy * kron(pauli(Axis::y), pauli(Axis::y))
         + params.j_zz * kron(pauli(Axis::z), pauli(Axis::z));
}

linalg::C4Matrix total_hamiltonian(const RIParams& params) {
    return system_hamiltonian(params) + ancilla_hamiltonian(params) + interaction_hamiltonian(params);
}

EnergyParameters theta_phi(const RIParams& params) {
    const double sum = params.j_xx + params.j_yy;
    const double diff = params.j_xx - params.j_yy;
    return {std::hypot(2.0 * sum, params.omega_a - params.omega_s),
            std::hypot(2.0 * diff, params.omega_a + params.omega_s)};
}

std::optional<double> effective_beta(const QubitState& state, double omega_s) {
    if (!state.is_diagonal()) return std::nullopt;
    if (state.p >= 1.0) return std::numeric_limits<double>::infinity();
    if (state.p <= 0.0) return -std::numeric_limits<double>::infinity();
    return -std::log((1.0 - state.p) / state.p) / omega_s;
}

} // namespace ri
