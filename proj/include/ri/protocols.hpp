// protocols.hpp — Thermalization with a few long collisions and random weak couplings

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ri/collision.hpp"
#include "ri/model.hpp"

namespace ri::protocols {

struct ProtocolConfig {
    double omega_s{2.0};
    double omega_a{2.0};
    double j_max{0.01};      // couplings drawn from U(0, j_max)
    double tau{100.0};
    long long n_max{10};
    std::uint64_t seed{0};
    double beta{1.0};
    bool signed_draws{false};  // U(-j_max, j_max) instead; exploratory
    bool randomize_jzz{false}; // also draw j_zz; exploratory

    static ProtocolConfig shared_frequency(double omega, double j_max, double tau, long long n_max,
                                           std::uint64_t seed, double beta) {
        return {omega, omega, j_max, tau, n_max, seed, beta, false, false};
    }

    bool operator==(const ProtocolConfig&) const = default;
};

// Throws ContractViolation for non-positive frequencies, tau or j_max, negative
// n_max or beta.
void validate(const ProtocolConfig& config);

// Each collision draws j_xx then j_yy (then j_zz if enabled) from the seeded
// generator, rebuilds the unitary and applies one exact step. The record carries
// ledgers and the drawn couplings; its params hold zero couplings.
TrajectoryRecord randomized_thermalization(const QubitState& state0, const ProtocolConfig& config);

struct RegimeDiagnostics {
    double theta_over_phi;   // at j_xx = j_yy = j_max
    double j_tau;            // j_max * tau
    double eta_at_j_max;     // eta at j_xx = j_yy = j_max
    double eta_min;          // over the draw box [0, j_max]^2
    double eta_max;
    double eta_mean;
    std::vector<std::string> warnings;
};

RegimeDiagnostics regime_diagnostics(const ProtocolConfig& config);

struct EnsembleSummary {
    long long seeds_run{0};
    double success_fraction{0.0};
    std::optional<double> median_n_to_threshold;  // over successful seeds
    std::vector<long long> n_to_threshold;        // -1 where the threshold was never reached
    double threshold{0.02};
    std::string generator;
};

inline constexpr double kDefaultThermalizationThreshold = 0.02;

// Runs `seeds` protocols with seeds config.seed, config.seed + 1, ... and records
// the first collision whose trace distance to the ancilla state drops below
// `threshold`. The initial state is `state0` or, when empty, random per seed.
EnsembleSummary thermalization_ensemble(const ProtocolConfig& config, long long seeds,
                                        double threshold = kDefaultThermalizationThreshold,
                                        const std::optional<QubitState>& state0 = std::nullopt);

// Initial state used by the ensemble for one seed when none is supplied.
QubitState ensemble_initial_state(std::uint64_t seed);

} // namespace ri::protocols
