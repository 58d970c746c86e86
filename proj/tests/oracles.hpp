// oracles.hpp — Independent reference implementations used only by the tests
//
// Nothing here calls the library's numerics. Matrices are written out entry by
// entry, exponentials come from a dense eigendecomposition, and the closed forms
// are transcribed term by term in their original (unsimplified) shape.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "ri/model.hpp"

namespace oracle {

using cd = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;
inline constexpr cd I{0.0, 1.0};

// Total Hamiltonian in the |dd>, |du>, |ud>, |uu> basis (system first).
inline M4 hamiltonian(const ri::RIParams& p) {
    const double ws = p.omega_s, wa = p.omega_a, jz = p.j_zz;
    M4 h = M4::Zero();
    h(0, 0) = jz - wa / 2 - ws / 2;
    h(1, 1) = -jz + wa / 2 - ws / 2;
    h(2, 2) = -jz - wa / 2 + ws / 2;
    h(3, 3) = jz + wa / 2 + ws / 2;
    h(0, 3) = h(3, 0) = p.j_xx - p.j_yy;
    h(1, 2) = h(2, 1) = p.j_xx + p.j_yy;
    return h;
}

// exp(-i h t) for Hermitian h via its eigendecomposition.
template <class M>
M expm_hermitian(const M& h, double t) {
    Eigen::SelfAdjointEigenSolver<M> es(h);
    const auto& v = es.eigenvectors();
    M d = M::Zero();
    for (Eigen::Index k = 0; k < h.rows(); ++k) d(k, k) = std::exp(-I * es.eigenvalues()(k) * t);
    return v * d * v.adjoint();
}

inline M4 unitary(const ri::RIParams& p) { return expm_hermitian(hamiltonian(p), p.tau); }

// Collision unitary for j_zz = 0, entry by entry.
inline M4 unitary_closed_form(const ri::RIParams& p) {
    const double th = std::sqrt(4 * std::pow(p.j_xx + p.j_yy, 2) + std::pow(p.omega_a - p.omega_s, 2));
    const double ph = std::sqrt(4 * std::pow(p.j_xx - p.j_yy, 2) + std::pow(p.omega_a + p.omega_s, 2));
    const double t = p.tau;
    M4 u = M4::Zero();
    u(0, 0) = std::cos(ph * t / 2) + I * (p.omega_a + p.omega_s) / ph * std::sin(ph * t / 2);
    u(0, 3) = -2.0 * I * (p.j_xx - p.j_yy) / ph * std::sin(ph * t / 2);
    u(1, 1) = std::cos(th * t / 2) - I * (p.omega_a - p.omega_s) / th * std::sin(th * t / 2);
    u(1, 2) = -2.0 * I * (p.j_xx + p.j_yy) / th * std::sin(th * t / 2);
    u(2, 1) = u(1, 2);
    u(2, 2) = std::cos(th * t / 2) + I * (p.omega_a - p.omega_s) / th * std::sin(th * t / 2);
    u(3, 0) = u(0, 3);
    u(3, 3) = std::cos(ph * t / 2) - I * (p.omega_a + p.omega_s) / ph * std::sin(ph * t / 2);
    return u;
}

inline M2 density(const ri::QubitState& s) {
    M2 r;
    r << s.p, s.c, std::conj(s.c), 1.0 - s.p;
    return r;
}

inline M4 product(const M2& a, const M2& b) {
    M4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

inline M2 trace_out_ancilla(const M4& r) {
    M2 s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s(i, j) = r(2 * i, 2 * j) + r(2 * i + 1, 2 * j + 1);
    return s;
}

inline double ancilla_ground(double beta, double omega_a) { return 1.0 / (1.0 + std::exp(-beta * omega_a)); }

inline M2 ancilla(double beta, double omega_a) {
    M2 a = M2::Zero();
    a(0, 0) = ancilla_ground(beta, omega_a);
    a(1, 1) = 1.0 - a(0, 0);
    return a;
}

// One collision through the full 4x4 product.
inline ri::QubitState step(const ri::QubitState& s, const ri::RIParams& p) {
    const M4 u = unitary(p);
    const M2 r = trace_out_ancilla(u * product(density(s), ancilla(p.beta, p.omega_a)) * u.adjoint());
    return {r(0, 0).real(), r(0, 1)};
}

struct Ledger {
    double w, q, de;
};

// Energy changes from their trace definitions.
inline Ledger ledger(const ri::QubitState& s, const ri::RIParams& p) {
    const M4 u = unitary(p);
    const M4 rho = product(density(s), ancilla(p.beta, p.omega_a));
    const M4 after = u * rho * u.adjoint();
    M2 sz;
    sz << 1, 0, 0, -1;
    const M2 id = M2::Identity();
    const M4 hs = product(-p.omega_s / 2 * sz, id);
    const M4 ha = product(id, -p.omega_a / 2 * sz);
    const M4 hi = hamiltonian(p) - hs - ha;
    return {(hi * (after - rho)).trace().real(), (ha * (after - rho)).trace().real(),
            (hs * (after - rho)).trace().real()};
}

// Single-step population map, all terms kept.
inline double population_step(double ps, const ri::RIParams& p) {
    const double pa = ancilla_ground(p.beta, p.omega_a);
    const double jm = p.j_xx - p.j_yy, jp = p.j_xx + p.j_yy;
    const double dm = p.omega_a - p.omega_s, dp = p.omega_a + p.omega_s;
    const double th = std::sqrt(4 * jp * jp + dm * dm);
    const double ph = std::sqrt(4 * jm * jm + dp * dp);
    const double t = p.tau;
    const double sth2 = std::pow(std::sin(th * t / 2), 2), sph2 = std::pow(std::sin(ph * t / 2), 2);
    return 4 * jm * jm / (ph * ph) * (1 - pa) * sph2 + 4 * pa * jp * jp / (th * th) * sth2
           + ps * (0.5 * (1 - pa) * (1 + std::cos(th * t)) - 4 * (1 - pa) * jm * jm / (ph * ph) * sph2
                   + pa * std::pow(std::cos(ph * t / 2), 2) - 4 * pa * jp * jp / (th * th) * sth2
                   + (1 - pa) * dm * dm / (th * th) * sth2 + pa * dp * dp / (ph * ph) * sph2);
}

// Relaxation rate in its long, ancilla-dependent form.
inline double eta_long(const ri::RIParams& p) {
    const double pa = ancilla_ground(p.beta, p.omega_a);
    const double jm = p.j_xx - p.j_yy, jp = p.j_xx + p.j_yy;
    const double dm = p.omega_a - p.omega_s, dp = p.omega_a + p.omega_s;
    const double th = std::sqrt(4 * jp * jp + dm * dm);
    const double ph = std::sqrt(4 * jm * jm + dp * dp);
    const double t = p.tau;
    const double sth2 = std::pow(std::sin(th * t / 2), 2), sph2 = std::pow(std::sin(ph * t / 2), 2);
    return dm * dm / (th * th) * sth2 + 0.5 * (1 + std::cos(th * t)) - 4 * jm * jm / (ph * ph) * sph2
           + pa * (-0.5 * (1 + std::cos(th * t)) + std::pow(std::cos(ph * t / 2), 2) + 4 * jm * jm / (ph * ph) * sph2
                   - dm * dm / (th * th) * sth2 + dp * dp / (ph * ph) * sph2 - 4 * jp * jp / (th * th) * sth2);
}

// Steady population in the cosine form.
inline double steady_cosine_form(const ri::RIParams& p) {
    const double pa = ancilla_ground(p.beta, p.omega_a);
    const double jm = p.j_xx - p.j_yy, jp = p.j_xx + p.j_yy;
    const double th = std::sqrt(4 * jp * jp + std::pow(p.omega_a - p.omega_s, 2));
    const double ph = std::sqrt(4 * jm * jm + std::pow(p.omega_a + p.omega_s, 2));
    const double t = p.tau;
    const double a = th * th * (1 - std::cos(ph * t)) * jm * jm;
    const double b = ph * ph * (1 - std::cos(th * t)) * jp * jp;
    return (a * (1 - pa) + b * pa) / (b + a);
}

// Coherence factor with the zz phase and ancilla-dependent term; j_zz = 0 gives psi.
inline cd psi_tilde(const ri::RIParams& p, double chi, double pa) {
    const double jm = p.j_xx - p.j_yy, jp = p.j_xx + p.j_yy;
    const double dm = p.omega_a - p.omega_s, dp = p.omega_a + p.omega_s;
    const double th = std::sqrt(4 * jp * jp + dm * dm);
    const double ph = std::sqrt(4 * jm * jm + dp * dp);
    const double t = p.tau;
    const double z = 2 * p.j_zz * t;
    const double k = 4 * (p.j_xx * p.j_xx - p.j_yy * p.j_yy) / (th * ph) * std::sin(th * t / 2) * std::sin(ph * t / 2);
    const cd m = (std::cos(th * t / 2) - I * dm / th * std::sin(th * t / 2))
                 * (std::cos(ph * t / 2) + I * dp / ph * std::sin(ph * t / 2));
    return k * std::exp(-I * (chi + z)) + std::exp(I * (chi + z)) * m
           + 2.0 * I * pa * (k * std::exp(-I * chi) - std::exp(I * chi) * m) * std::sin(z);
}

inline cd coherence_step(cd c, const ri::RIParams& p) {
    if (c == cd{}) return {};
    return psi_tilde(p, std::arg(c), ancilla_ground(p.beta, p.omega_a)) * std::abs(c);
}

// Closed-form energetics with sin^2 / x^2 weights.
inline Ledger ledger_closed(double ps, const ri::RIParams& p) {
    const double pa = ancilla_ground(p.beta, p.omega_a);
    const double jm = p.j_xx - p.j_yy, jp = p.j_xx + p.j_yy;
    const double dm = p.omega_a - p.omega_s, dp = p.omega_a + p.omega_s;
    const double th = std::sqrt(4 * jp * jp + dm * dm);
    const double ph = std::sqrt(4 * jm * jm + dp * dp);
    const double t = p.tau;
    const double a = jp * jp / (th * th) * std::pow(std::sin(th * t / 2), 2);
    const double b = jm * jm / (ph * ph) * std::pow(std::sin(ph * t / 2), 2);
    return {4 * (a * dm * (ps - pa) - b * dp * (ps - (1 - pa))), 4 * p.omega_a * (-a * (ps - pa) + b * (ps - (1 - pa))),
            4 * p.omega_s * (a * (ps - pa) + b * (ps - (1 - pa)))};
}

// (1/2) Tr|a - b| from the eigenvalues of the difference.
inline double trace_distance(const ri::QubitState& a, const ri::QubitState& b) {
    Eigen::SelfAdjointEigenSolver<M2> es(density(a) - density(b));
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

inline M2 sqrtm_psd(const M2& m) {
    Eigen::SelfAdjointEigenSolver<M2> es(m);
    Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
}

// (Tr sqrt(sqrt(a) b sqrt(a)))^2 with explicit matrix square roots.
inline double fidelity(const ri::QubitState& a, const ri::QubitState& b) {
    const M2 ra = sqrtm_psd(density(a));
    const M2 inner = ra * density(b) * ra;
    const double t = sqrtm_psd(0.5 * (inner + inner.adjoint())).trace().real();
    return t * t;
}

// Uniform state in the Bloch ball by rejection, independent of the library sampler.
inline ri::QubitState random_state(std::mt19937_64& g) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const double x = u(g), y = u(g), z = u(g);
        if (x * x + y * y + z * z <= 1.0) return {0.5 * (1 + z), {0.5 * x, -0.5 * y}};
    }
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

} // namespace oracle
