// metrics.cpp — Trace distance, fidelity and convergence-time search

#include "ri/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ri/analytic.hpp"
#include "ri/collision.hpp"
#include "ri/errors.hpp"
#include "ri/thermo.hpp"

namespace ri::metrics {

std::string_view to_string(Metric m) {
    switch (m) {
    case Metric::trace_distance:
        return "trace";
    case Metric::infidelity:
        return "infidelity";
    }
    return "trace";
}

Metric metric_from_string(std::string_view name) {
    if (name == "trace" || name == "trace_distance") return Metric::trace_distance;
    if (name == "infidelity") return Metric::infidelity;
    throw ValidationError("metric", "unknown metric '" + std::string(name)
                                        + "' (expected trace or infidelity)");
}

double trace_distance(const QubitState& a, const QubitState& b) {
    return std::hypot(a.p - b.p, std::abs(a.c - b.c));
}

double fidelity(const QubitState& a, const QubitState& b) {
    const double overlap = a.p * b.p + (1.0 - a.p) * (1.0 - b.p) + 2.0 * (a.c * std::conj(b.c)).real();
    const double det_a = std::max(0.0, a.p * (1.0 - a.p) - std::norm(a.c));
    const double det_b = std::max(0.0, b.p * (1.0 - b.p) - std::norm(b.c));
    return std::clamp(overlap + 2.0 * std::sqrt(det_a * det_b), 0.0, 1.0);
}

double distance(Metric m, const QubitState& a, const QubitState& b) {
    return m == Metric::trace_distance ? trace_distance(a, b) : 1.0 - fidelity(a, b);
}

long long n_star_bound(double initial_distance, double eta, double epsilon) {
    if (!(epsilon > 0.0)) throw ContractViolation("n_star_bound: epsilon must be > 0");
    if (!(initial_distance >= 0.0)) throw ContractViolation("n_star_bound: negative distance");
    if (epsilon >= initial_distance) return 0;
    const double rate = std::abs(eta);
    if (rate >= 1.0) throw DegenerateParameters("n_star_bound: |eta| = 1, no convergence");
    if (rate == 0.0) throw ContractViolation("n_star_bound: eta = 0 is outside 0 < |eta| < 1");

    auto n = static_cast<long long>(std::ceil(std::log(epsilon / initial_distance) / std::log(rate)));
    n = std::max(n, 0LL);
    // Settle the rounding of the logarithms against the defining inequality.
    auto within = [&](long long k) {
        return std::pow(rate, static_cast<double>(k)) * initial_distance <= epsilon;
    };
    while (n > 0 && within(n - 1)) --n;
    while (!within(n)) ++n;
    return n;
}

long long n_star_bound_diagonal(double p0, const RIParams& params, double epsilon) {
    if (analytic::is_degenerate(params)) {
        throw DegenerateParameters("n_star_bound_diagonal: eta = 1 (resonant collision time)");
    }
    const double p_inf = analytic::steady_population(params);
    return n_star_bound(std::abs(p0 - p_inf), analytic::eta(params), epsilon);
}

ConvergenceReport n_star_numeric(const QubitState& state0, const RIParams& params, double epsilon,
                                 Metric metric, long long max_steps) {
    if (!(epsilon > 0.0)) throw ContractViolation("n_star_numeric: epsilon must be > 0");
    if (max_steps < 0) throw ContractViolation("n_star_numeric: max_steps must be >= 0");
    if (!state0.is_physical()) throw ContractViolation("n_star_numeric: state is not physical");
    if (analytic::is_degenerate(params)) {
        throw DegenerateParameters("n_star_numeric: eta = 1 (resonant collision time)");
    }
    const QubitState target = QubitState::diagonal(analytic::steady_population(params));
    const CollisionUnitary u(params);
    const CollisionChannel channel = collision_channel(u, thermal_ancilla(params.beta, params.omega_a));

    ConvergenceReport report;
    report.metric = metric;
    report.epsilon = epsilon;

    // The closed-form work is affine in the population.
    const double w_at_excited = thermo::step_energetics_closed(QubitState::diagonal(0.0), params).w;
    const double w_slope = thermo::step_energetics_closed(QubitState::diagonal(1.0), params).w - w_at_excited;

    QubitState s = state0;
    double invested = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (long long n = 0;; ++n) {
        const double d = distance(metric, s, target);
        best = std::min(best, d);
        if (d <= epsilon) {
            report.n_star = n;
            report.achieved_distance = d;
            report.total_work = invested;
            return report;
        }
        if (n == max_steps) break;
        invested -= w_slope * s.p + w_at_excited;
        s = channel.apply(s);
    }
    throw NonConvergence("n_star_numeric: threshold " + std::to_string(epsilon) + " not reached within "
                             + std::to_string(max_steps) + " collisions",
                         best, max_steps);
}

} // namespace ri::metrics
