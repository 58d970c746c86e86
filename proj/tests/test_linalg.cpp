// test_linalg.cpp — Pauli algebra, 2x2 exponentials, Kronecker products, partial trace

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ri/errors.hpp"
#include "ri/linalg.hpp"

using namespace ri::linalg;
using cd = std::complex<double>;

namespace {

C2Matrix random_hermitian(std::mt19937_64& g, double scale = 3.0) {
    C2Matrix h;
    const double a = oracle::uniform(g, -scale, scale), d = oracle::uniform(g, -scale, scale);
    const cd b{oracle::uniform(g, -scale, scale), oracle::uniform(g, -scale, scale)};
    h << a, b, std::conj(b), d;
    return h;
}

C2Matrix random_matrix(std::mt19937_64& g) {
    C2Matrix m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = {oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1)};
    return m;
}

double max_abs(const auto& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("pauli matrices follow the ground-first ordering") {
    const C2Matrix z = pauli(Axis::z);
    CHECK(z(0, 0) == cd{1.0});
    CHECK(z(1, 1) == cd{-1.0});
    CHECK(max_abs(pauli(Axis::x) * pauli(Axis::x) - C2Matrix::Identity()) == 0.0);
    const C2Matrix comm = pauli(Axis::x) * pauli(Axis::y) - pauli(Axis::y) * pauli(Axis::x);
    CHECK(max_abs(comm - cd{0.0, 2.0} * z) == 0.0);
    CHECK(max_abs(pauli(Axis::id) - C2Matrix::Identity()) == 0.0);
}

TEST_CASE("2x2 exponential: trivial cases") {
    CHECK(max_abs(exp_2x2_hermitian(C2Matrix::Zero().eval(), 3.7) - C2Matrix::Identity()) < 1e-15);
    const double w = 1.3, t = 0.9;
    const C2Matrix u = exp_2x2_hermitian((w / 2 * pauli(Axis::z)).eval(), t);
    CHECK(std::abs(u(0, 0) - std::exp(cd{0, -w * t / 2})) < 1e-15);
    CHECK(std::abs(u(1, 1) - std::exp(cd{0, w * t / 2})) < 1e-15);
    CHECK(std::abs(u(0, 1)) < 1e-15);
}

TEST_CASE("2x2 exponential matches an eigendecomposition") {
    std::mt19937_64 g(11);
    for (int k = 0; k < 500; ++k) {
        const C2Matrix h = random_hermitian(g);
        CHECK(max_abs(exp_2x2_hermitian(h, 0.7) - oracle::expm_hermitian(h, 0.7)) < 1e-12);
    }
}

TEST_CASE("2x2 exponential is unitary and a one-parameter group") {
    std::mt19937_64 g(12);
    for (int k = 0; k < 500; ++k) {
        const C2Matrix h = random_hermitian(g);
        const double t1 = oracle::uniform(g, -2, 2), t2 = oracle::uniform(g, -2, 2);
        CHECK(is_unitary(exp_2x2_hermitian(h, t1)));
        CHECK(max_abs(exp_2x2_hermitian(h, t1) * exp_2x2_hermitian(h, t2) - exp_2x2_hermitian(h, t1 + t2)) < 1e-11);
    }
}

TEST_CASE("2x2 exponential rejects non-Hermitian input") {
    C2Matrix h = C2Matrix::Zero();
    h(0, 1) = 1.0;
    CHECK_THROWS_AS(exp_2x2_hermitian(h, 1.0), ri::ContractViolation);
}

TEST_CASE("2x2 exponential works in single precision") {
    const Mat2<float> h = pauli<float>(Axis::x);
    const Mat2<float> u = exp_2x2_hermitian(h, 0.5f);
    CHECK(std::abs(u(0, 0) - std::complex<float>(std::cos(0.5f))) < 1e-6f);
}

TEST_CASE("kron uses system-then-ancilla ordering") {
    const C2Matrix id = pauli(Axis::id), z = pauli(Axis::z), x = pauli(Axis::x), y = pauli(Axis::y);
    CHECK(max_abs(kron(id, id) - C4Matrix::Identity()) == 0.0);
    const C4Matrix zi = kron(z, id);
    CHECK(zi(0, 0) == cd{1.0});
    CHECK(zi(1, 1) == cd{1.0});
    CHECK(zi(2, 2) == cd{-1.0});
    CHECK(zi(3, 3) == cd{-1.0});
    const C4Matrix xy = kron(x, x) + kron(y, y);
    CHECK(xy(1, 2) == cd{2.0});
    CHECK(xy(2, 1) == cd{2.0});
    CHECK(xy(0, 3) == cd{0.0});
    CHECK(xy(3, 0) == cd{0.0});
}

TEST_CASE("kron mixed-product property") {
    std::mt19937_64 g(13);
    for (int k = 0; k < 200; ++k) {
        const C2Matrix a = random_matrix(g), b = random_matrix(g), c = random_matrix(g), d = random_matrix(g);
        CHECK(max_abs(kron(a, b) * kron(c, d) - kron((a * c).eval(), (b * d).eval())) < 1e-12);
        CHECK(max_abs(kron(a, b) - oracle::product(a, b)) == 0.0);
    }
}

TEST_CASE("partial trace recovers product factors and is linear") {
    std::mt19937_64 g(14);
    for (int k = 0; k < 200; ++k) {
        const C2Matrix rs = oracle::density(oracle::random_state(g));
        const C2Matrix ra = oracle::density(oracle::random_state(g));
        CHECK(max_abs(partial_trace_ancilla(kron(rs, ra)) - rs) < 1e-15);

        const C2Matrix rs2 = oracle::density(oracle::random_state(g));
        const double w = oracle::uniform(g, 0, 1);
        const C4Matrix mix = w * kron(rs, ra) + (1 - w) * kron(rs2, ra);
        CHECK(max_abs(partial_trace_ancilla(mix) - (w * rs + (1 - w) * rs2)) < 1e-14);
        CHECK(std::abs(partial_trace_ancilla(mix).trace() - 1.0) < 1e-12);
    }
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    Eigen::Vector4cd bell(1, 0, 0, 1);
    bell /= std::sqrt(2.0);
    const C4Matrix rho = bell * bell.adjoint();
    CHECK(max_abs(partial_trace_ancilla(rho) - 0.5 * C2Matrix::Identity()) < 1e-15);
}

TEST_CASE("partial trace after a random unitary stays a valid state") {
    std::mt19937_64 g(15);
    for (int k = 0; k < 200; ++k) {
        C4Matrix h = C4Matrix::Zero();
        for (int i = 0; i < 4; ++i) {
            h(i, i) = oracle::uniform(g, -3, 3);
            for (int j = i + 1; j < 4; ++j) {
                h(i, j) = {oracle::uniform(g, -3, 3), oracle::uniform(g, -3, 3)};
                h(j, i) = std::conj(h(i, j));
            }
        }
        const C4Matrix u = oracle::expm_hermitian(h, 1.0);
        const C4Matrix rho = kron(oracle::density(oracle::random_state(g)), oracle::density(oracle::random_state(g)));
        const C2Matrix r = partial_trace_ancilla(C4Matrix(u * rho * u.adjoint()));
        CHECK(is_hermitian(r));
        CHECK(std::abs(r.trace() - 1.0) < 1e-12);
        Eigen::SelfAdjointEigenSolver<C2Matrix> es(r);
        CHECK(es.eigenvalues().minCoeff() > -1e-12);
    }
}

TEST_CASE("partial trace rejects non-normalised input") {
    CHECK_THROWS_AS(partial_trace_ancilla(C4Matrix::Identity().eval()), ri::ContractViolation);
}
