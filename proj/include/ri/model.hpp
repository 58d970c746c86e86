// model.hpp — Physical parameters, Hamiltonians and qubit states of the collision model

#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "ri/linalg.hpp"

namespace ri {

using Complex = std::complex<double>;

// One repeated-interaction configuration (hbar = 1).
struct RIParams {
    double omega_s{1.0}; // system splitting
    double omega_a{1.0}; // ancilla splitting
    double j_xx{0.0};
    double j_yy{0.0};
    double j_zz{0.0};
    double beta{1.0};    // inverse bath temperature
    double tau{0.01};    // collision time

    friend bool operator==(const RIParams&, const RIParams&) = default;
};

// Throws ContractViolation naming the offending field.
void validate(const RIParams& params);

// 64-bit FNV-1a over the bit patterns of every field.
std::uint64_t fingerprint(const RIParams& params);

// Qubit density matrix [[p, c], [c*, 1 - p]] with p the ground population.
struct QubitState {
    double p{1.0};
    Complex c{0.0, 0.0};

    friend bool operator==(const QubitState&, const QubitState&) = default;

    static QubitState diagonal(double p) { return {p, {0.0, 0.0}}; }

    double coherence_magnitude() const { return std::abs(c); }
    bool is_diagonal(double tol = 1e-12) const { return std::abs(c) < tol; }

    // |c|^2 <= p(1-p) + tol and 0 <= p <= 1 (within tol).
    bool is_physical(double tol = 1e-12) const;

    linalg::C2Matrix matrix() const;
    // Reads p and c from the (0,0) and (0,1) entries; trace is not re-normalised.
    static QubitState from_matrix(const linalg::C2Matrix& m);
};

// Gibbs state of the ancilla at inverse temperature beta; rejects beta < 0.
QubitState thermal_ancilla(double beta, double omega_a);

// Terms of the total Hamiltonian embedded in the two-qubit space.
linalg::C4Matrix system_hamiltonian(const RIParams& params);
linalg::C4Matrix ancilla_hamiltonian(const RIParams& params);
linalg::C4Matrix interaction_hamiltonian(const RIParams& params);
linalg::C4Matrix total_hamiltonian(const RIParams& params);

// theta = sqrt(4(Jxx+Jyy)^2 + (wA-wS)^2), phi = sqrt(4(Jxx-Jyy)^2 + (wA+wS)^2).
struct EnergyParameters {
    double theta;
    double phi;
};

EnergyParameters theta_phi(const RIParams& params);

// Effective inverse temperature of a diagonal state:
//   beta_S = -(1/omega_s) ln((1-p)/p).
// nullopt for states carrying coherence; +/-infinity for pure states.
std::optional<double> effective_beta(const QubitState& state, double omega_s);

} // namespace ri
