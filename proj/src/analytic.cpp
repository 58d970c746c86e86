// analytic.cpp — Closed-form population and coherence maps

#include "ri/analytic.hpp"

#include <cmath>

#include "ri/errors.hpp"

namespace ri::analytic {

namespace {

constexpr double kSincSwitch = 1e-8;

double ancilla_population(const RIParams& params) {
    return thermal_ancilla(params.beta, params.omega_a).p;
}

// K and M in c' = K e^{-i chi} |c| + M e^{i chi} |c|.
struct CoherenceFactors {
    double conjugate; // K = 4 (Jxx^2 - Jyy^2) sin(theta tau/2) sin(phi tau/2) / (theta phi)
    Complex direct;   // M = [cos - i (wA-wS) sin/theta] [cos + i (wA+wS) sin/phi]
};

CoherenceFactors coherence_factors(const RIParams& params) {
    const auto t = relaxation_terms(params);
    const double jsq = params.j_xx * params.j_xx - params.j_yy * params.j_yy;
    const Complex center(t.cos_theta, -(params.omega_a - params.omega_s) * t.sinc_theta);
    const Complex outer(t.cos_phi, (params.omega_a + params.omega_s) * t.sinc_phi);
    return {4.0 * jsq * t.sinc_theta * t.sinc_phi, center * outer};
}

Complex unit_phase(double angle) { return std::polar(1.0, angle); }

} // namespace

double half_angle_sinc(double x, double tau) {
    if (std::abs(x) < kSincSwitch) {
        const double y = x * tau / 2.0;
        return tau / 2.0 * (1.0 - y * y / 6.0);
    }
    return std::sin(x * tau / 2.0) / x;
}

RelaxationTerms relaxation_terms(const RIParams& params) {
    validate(params);
    const auto [theta, phi] = theta_phi(params);
    RelaxationTerms t{};
    t.theta = theta;
    t.phi = phi;
    t.sinc_theta = half_angle_sinc(theta, params.tau);
    t.sinc_phi = half_angle_sinc(phi, params.tau);
    t.cos_theta = std::cos(theta * params.tau / 2.0);
    t.cos_phi = std::cos(phi * params.tau / 2.0);
    const double sum = params.j_xx + params.j_yy;
    const double diff = params.j_xx - params.j_yy;
    t.m_theta = 4.0 * sum * sum * t.sinc_theta * t.sinc_theta;
    t.m_phi = 4.0 * diff * diff * t.sinc_phi * t.sinc_phi;
    return t;
}

double eta(const RIParams& params) {
    const auto t = relaxation_terms(params);
    return 1.0 - t.m_theta - t.m_phi;
}

bool is_degenerate(const RIParams& params, double tol) {
    if (!(tol > 0.0)) throw ContractViolation("is_degenerate: tol must be > 0");
    const auto t = relaxation_terms(params);
    return t.m_theta + t.m_phi < tol;
}

double steady_population(const RIParams& params) {
    const auto t = relaxation_terms(params);
    const double rate = t.m_theta + t.m_phi; // 1 - eta
    if (rate < kDegeneracyTol) {
        throw DegenerateParameters("steady_population: eta = 1 (resonant collision time); "
                                   "populations never relax");
    }
    const double p_a = ancilla_population(params);
    // Equal to the (1 - cos) form after multiplying through by theta^2 phi^2 / 2.
    return (t.m_theta * p_a + t.m_phi * (1.0 - p_a)) / rate;
}

std::optional<double> steady_population_short_tau(const RIParams& params) {
    validate(params);
    const double jx = params.j_xx;
    const double jy = params.j_yy;
    const double norm = jx * jx + jy * jy;
    if (norm == 0.0) return std::nullopt;
    const double p_a = ancilla_population(params);
    return (4.0 * p_a * jx * jy + (jx - jy) * (jx - jy)) / (2.0 * norm);
}

PopulationPrediction predict_population(long long n, double p0, const RIParams& params) {
    if (n < 0) throw ContractViolation("predict_population: n must be >= 0");
    if (is_degenerate(params)) return {p0, true};
    if (n == 0) return {p0, false};
    const double p_inf = steady_population(params);
    return {p_inf + std::pow(eta(params), static_cast<double>(n)) * (p0 - p_inf), false};
}

Complex psi(const RIParams& params, double chi) {
    const auto f = coherence_factors(params);
    return f.conjugate * unit_phase(-chi) + unit_phase(chi) * f.direct;
}

Complex psi_tilde(const RIParams& params, double chi, double p_a) {
    if (p_a < 0.5 - 1e-12 || p_a > 1.0 + 1e-12) {
        throw ContractViolation("psi_tilde: p_a must lie in [1/2, 1]");
    }
    const auto f = coherence_factors(params);
    const double z = 2.0 * params.j_zz * params.tau;
    const Complex shifted = f.conjugate * unit_phase(-(chi + z)) + unit_phase(chi + z) * f.direct;
    const Complex bare_difference = f.conjugate * unit_phase(-chi) - unit_phase(chi) * f.direct;
    return shifted + Complex(0.0, 2.0 * p_a) * bare_difference * std::sin(z);
}

std::vector<Complex> coherence_sequence(long long n, Complex c0, const RIParams& params) {
    if (n < 0) throw ContractViolation("coherence_sequence: n must be >= 0");
    const double p_a = ancilla_population(params);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(c0);
    Complex c = c0;
    for (long long k = 0; k < n; ++k) {
        if (c != Complex(0.0, 0.0)) {
            c = psi_tilde(params, std::atan2(c.imag(), c.real()), p_a) * std::abs(c);
        }
        out.push_back(c);
    }
    return out;
}

Complex predict_coherence(long long n, Complex c0, const RIParams& params) {
    if (n < 0) throw ContractViolation("predict_coherence: n must be >= 0");
    const double p_a = ancilla_population(params);
    Complex c = c0;
    for (long long k = 0; k < n && c != Complex(0.0, 0.0); ++k) {
        c = psi_tilde(params, std::atan2(c.imag(), c.real()), p_a) * std::abs(c);
    }
    return c;
}

RelaxationSummary summarize(const RIParams& params) {
    const auto t = relaxation_terms(params);
    RelaxationSummary s{};
    s.eta = 1.0 - t.m_theta - t.m_phi;
    s.theta = t.theta;
    s.phi = t.phi;
    s.degenerate = is_degenerate(params);
    s.p_a = ancilla_population(params);
    s.p_inf_short_tau = steady_population_short_tau(params);
    if (!s.degenerate) {
        s.p_inf = steady_population(params);
        s.beta_s_inf = effective_beta(QubitState::diagonal(*s.p_inf), params.omega_s);
    }
    return s;
}

} // namespace ri::analytic
