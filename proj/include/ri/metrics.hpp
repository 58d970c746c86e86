// metrics.hpp — State distances and the number of collisions needed to converge

#pragma once

#include <string_view>

#include "ri/model.hpp"

namespace ri::metrics {

enum class Metric { trace_distance, infidelity };

std::string_view to_string(Metric m);
// Accepts "trace", "trace_distance" and "infidelity"; throws ValidationError otherwise.
Metric metric_from_string(std::string_view name);

// (1/2) Tr|a - b|. For qubits the difference has eigenvalues +/- sqrt(dp^2 + |dc|^2).
double trace_distance(const QubitState& a, const QubitState& b);

// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2 via the qubit identity
// F = Tr(a b) + 2 sqrt(det a det b).
double fidelity(const QubitState& a, const QubitState& b);

double distance(Metric m, const QubitState& a, const QubitState& b);

inline constexpr long long kDefaultStepCap = 10'000'000;

struct ConvergenceReport {
    long long n_star{0};
    Metric metric{Metric::trace_distance};
    double epsilon{0.0};
    double achieved_distance{0.0};
    double total_work{0.0}; // invested work -sum W_I over the first n_star collisions
};

// Smallest n with |eta|^n d0 <= epsilon, for a given initial distance d0 > 0.
long long n_star_bound(double initial_distance, double eta, double epsilon);

// The same bound for a diagonal initial state, with eta and p_inf from the closed forms.
// Throws DegenerateParameters for eta = 1 and ContractViolation for eta = 0.
long long n_star_bound_diagonal(double p0, const RIParams& params, double epsilon);

// First collision count whose state lies within epsilon of the (diagonal) steady state.
// Throws NonConvergence carrying the best distance seen when the cap is hit.
ConvergenceReport n_star_numeric(const QubitState& state0, const RIParams& params, double epsilon,
                                 Metric metric, long long max_steps = kDefaultStepCap);

} // namespace ri::metrics
