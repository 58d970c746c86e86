// test_thermo.cpp — Work, heat and energy ledgers

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ri/analytic.hpp"
#include "ri/collision.hpp"
#include "ri/errors.hpp"
#include "ri/thermo.hpp"

using namespace ri::thermo;
using ri::QubitState;
using ri::RIParams;

namespace {

RIParams fig6() { return RIParams{1.0, 2.0, 2.0, 1.0, 4.0, 1.0, 0.01}; }

RIParams random_params(std::mt19937_64& g, bool with_zz = true) {
    return RIParams{oracle::uniform(g, 0.01, 5),
                    oracle::uniform(g, 0.01, 5),
                    oracle::uniform(g, -5, 5),
                    oracle::uniform(g, -5, 5),
                    with_zz ? oracle::uniform(g, -5, 5) : 0.0,
                    oracle::uniform(g, 0, 10),
                    oracle::uniform(g, 0.01, 2)};
}

} // namespace

TEST_CASE("numeric ledger equals the trace definitions") {
    std::mt19937_64 g(41);
    for (int k = 0; k < 1000; ++k) {
        const RIParams p = random_params(g);
        const QubitState s = oracle::random_state(g);
        const auto l = step_energetics_numeric(s, p, ri::CollisionUnitary(p));
        const auto o = oracle::ledger(s, p);
        CHECK(std::abs(l.w - o.w) < 1e-11);
        CHECK(std::abs(l.q - o.q) < 1e-11);
        CHECK(std::abs(l.de_s - o.de) < 1e-11);
        CHECK(std::abs(l.residual) <= ri::kFirstLawTol);
    }
}

TEST_CASE("closed-form ledger matches numeric ledger with and without zz coupling") {
    std::mt19937_64 g(42);
    for (int k = 0; k < 10000; ++k) {
        const RIParams p = random_params(g, k % 2 == 0);
        const QubitState s = oracle::random_state(g);
        const auto c = step_energetics_closed(s, p);
        const auto n = step_energetics_numeric(s, p, ri::CollisionUnitary(p));
        CHECK(std::abs(c.w - n.w) < 1e-10);
        CHECK(std::abs(c.q - n.q) < 1e-10);
        CHECK(std::abs(c.de_s - n.de_s) < 1e-10);
        const auto o = oracle::ledger_closed(s.p, p);
        CHECK(std::abs(c.w - o.w) < 1e-12);
        CHECK(std::abs(c.q - o.q) < 1e-12);
        CHECK(std::abs(c.de_s - o.de) < 1e-12);
    }
}

TEST_CASE("numeric ledger refuses a stale unitary") {
    RIParams other = fig6();
    other.j_zz = 0.0;
    CHECK_THROWS_AS(step_energetics_numeric(QubitState::diagonal(0.5), fig6(), ri::CollisionUnitary(other)),
                    ri::ContractViolation);
}

TEST_CASE("equal couplings at equal frequencies cost no work") {
    std::mt19937_64 g(43);
    for (int k = 0; k < 500; ++k) {
        RIParams p = random_params(g);
        p.j_yy = p.j_xx;
        p.omega_a = p.omega_s;
        const QubitState s = oracle::random_state(g);
        CHECK(std::abs(step_energetics_closed(s, p).w) < 1e-15);
        CHECK(std::abs(step_energetics_numeric(s, p, ri::CollisionUnitary(p)).w) < 1e-12);
    }
}

TEST_CASE("coherence does not enter the ledger") {
    std::mt19937_64 g(44);
    for (int k = 0; k < 500; ++k) {
        const RIParams p = random_params(g);
        const double pop = oracle::uniform(g, 0.1, 0.9);
        const double r = std::sqrt(pop * (1 - pop));
        const QubitState a{pop, std::polar(oracle::uniform(g, 0, r), oracle::uniform(g, 0, 6.3))};
        const QubitState b{pop, std::polar(oracle::uniform(g, 0, r), oracle::uniform(g, 0, 6.3))};
        const ri::CollisionUnitary u(p);
        const auto la = step_energetics_numeric(a, p, u), lb = step_energetics_numeric(b, p, u);
        CHECK(std::abs(la.w - lb.w) < 1e-12);
        CHECK(std::abs(la.q - lb.q) < 1e-12);
        CHECK(std::abs(la.de_s - lb.de_s) < 1e-12);
    }
}

TEST_CASE("cumulative work") {
    const QubitState s0{0.627, {0.459, -0.152}};
    const auto rec = ri::run_trajectory(s0, fig6(), 500, true);
    CHECK(cumulative_work(rec, 0) == 0.0);
    double sum = 0.0;
    for (int n = 1; n <= 500; ++n) sum -= rec.ledgers[n - 1].w;
    CHECK(cumulative_work(rec, 500) == doctest::Approx(sum).epsilon(1e-14));
    CHECK_THROWS_AS(cumulative_work(ri::run_trajectory(s0, fig6(), 10), 5), ri::ContractViolation);
    CHECK_THROWS_AS(cumulative_work(rec, 501), ri::ContractViolation);

    RIParams eq{1.0, 1.0, 1.2, 1.2, 0.0, 0.5, 0.05};
    const auto free_rec = ri::run_trajectory(s0, eq, 300, true);
    CHECK(std::abs(cumulative_work(free_rec, 300)) < 1e-12);
}

TEST_CASE("inverted start with opposite couplings is nearly free") {
    RIParams p{1.0, 1.0, 1.0, -1.0, 0.0, 1.0, 0.01};
    const double p_inf = ri::analytic::steady_population(p);
    const auto rec = ri::run_trajectory(QubitState::diagonal(p_inf + 1e-3), p, 1000, true);
    const auto far = ri::run_trajectory(QubitState::diagonal(0.9), p, 1000, true);
    CHECK(std::abs(cumulative_work(rec, 1000)) < 1e-2 * std::abs(cumulative_work(far, 1000)));
}

TEST_CASE("housekeeping work and heat") {
    const auto h = asymptotic_housekeeping(fig6());
    CHECK(h.w_inf != 0.0);
    CHECK(std::abs(h.q_inf + h.w_inf) < 1e-12);
    const auto rec = ri::run_trajectory(QubitState{0.627, {0.459, -0.152}}, fig6(), 20000, true);
    CHECK(std::abs(rec.ledgers.back().w - h.w_inf) < 1e-9);
    CHECK(std::abs(rec.ledgers.back().q - h.q_inf) < 1e-9);

    RIParams eq = fig6();
    eq.j_yy = eq.j_xx;
    const auto z = asymptotic_housekeeping(eq);
    CHECK(std::abs(z.w_inf) < 1e-15);
    CHECK(std::abs(z.q_inf) < 1e-15);

    RIParams hot = fig6();
    hot.beta = 0.001;
    CHECK(std::abs(asymptotic_housekeeping(hot).w_inf) < 1e-2 * std::abs(h.w_inf));

    RIParams rabi{1.0, 1.0, 1.0, 1.0, 0.0, 1.0, std::acos(-1.0)};
    CHECK_THROWS_AS(asymptotic_housekeeping(rabi), ri::DegenerateParameters);
}

TEST_CASE("system energy follows the geometric law") {
    std::mt19937_64 g(45);
    for (int k = 0; k < 20; ++k) {
        const RIParams p = random_params(g);
        if (ri::analytic::is_degenerate(p)) continue;
        const double p0 = oracle::uniform(g, 0, 1);
        const auto rec = ri::run_trajectory(QubitState::diagonal(p0), p, 300, true);
        const auto [a, b] = energy_coefficients(p);
        const double pa = ri::thermal_ancilla(p.beta, p.omega_a).p;
        for (int n = 0; n < 300; ++n) {
            CHECK(std::abs(rec.ledgers[n].de_s - system_energy_change(n, p0, p)) < 1e-10);
            CHECK(std::abs(rec.ledgers[n].de_s - ((a + b) * rec.states[n].p + pa * (b - a) - b)) < 1e-12);
        }
    }
}
