// analytic.hpp — Closed-form relaxation maps and steady states of the collision model
//
// Every formula below is written in terms of the "swap weights"
//   m_theta = 4 (Jxx+Jyy)^2 sin^2(theta tau/2) / theta^2
//   m_phi   = 4 (Jxx-Jyy)^2 sin^2(phi tau/2)   / phi^2
// evaluated through sin(x tau/2)/x, which tends to tau/2 as x -> 0. That keeps
// J_xx = -J_yy with omega_a = omega_s (theta = 0) finite without special cases.

#pragma once

#include <optional>
#include <vector>

#include "ri/model.hpp"

namespace ri::analytic {

inline constexpr double kDegeneracyTol = 1e-12;

// sin(x tau / 2) / x, continuous at x = 0.
double half_angle_sinc(double x, double tau);

struct RelaxationTerms {
    double theta;
    double phi;
    double sinc_theta;  // sin(theta tau/2)/theta
    double sinc_phi;    // sin(phi tau/2)/phi
    double cos_theta;   // cos(theta tau/2)
    double cos_phi;     // cos(phi tau/2)
    double m_theta;
    double m_phi;
};

RelaxationTerms relaxation_terms(const RIParams& params);

// Population relaxation rate, eta = 1 - m_theta - m_phi. Independent of beta.
double eta(const RIParams& params);

bool is_degenerate(const RIParams& params, double tol = kDegeneracyTol);

// Steady ground population. Throws DegenerateParameters when eta is within
// kDegeneracyTol of 1 (no steady state is approached).
double steady_population(const RIParams& params);

// Leading short-tau limit (4 pA Jxx Jyy + (Jxx-Jyy)^2) / (2 (Jxx^2 + Jyy^2)).
// nullopt when both couplings vanish.
std::optional<double> steady_population_short_tau(const RIParams& params);

struct PopulationPrediction {
    double p;
    bool degenerate; // true: eta == 1, p is frozen at its initial value
};

// p_n = p_inf + eta^n (p0 - p_inf).
PopulationPrediction predict_population(long long n, double p0, const RIParams& params);

// Coherence factor of the Jxx-Jyy model: c' = psi(chi) |c| with chi = arg c.
Complex psi(const RIParams& params, double chi);

// Coherence factor with the zz coupling; depends on the ancilla ground population.
// Reduces to psi() when j_zz = 0.
Complex psi_tilde(const RIParams& params, double chi, double p_a);

// Iterates c <- psi_tilde(arg c) |c| n times, re-extracting the phase each step.
Complex predict_coherence(long long n, Complex c0, const RIParams& params);

// Same iteration returning c_0 ... c_n.
std::vector<Complex> coherence_sequence(long long n, Complex c0, const RIParams& params);

struct RelaxationSummary {
    double eta;
    std::optional<double> p_inf;  // empty when degenerate
    double theta;
    double phi;
    bool degenerate;
    std::optional<double> p_inf_short_tau;
    double p_a;
    std::optional<double> beta_s_inf; // effective inverse temperature of the steady state
};

RelaxationSummary summarize(const RIParams& params);

} // namespace ri::analytic
