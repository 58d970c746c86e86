// linalg.hpp — Fixed-size complex kernel for one qubit (2x2) and qubit+ancilla (4x4)
//
// Basis ordering is shared by every module:
//   single qubit : |down>, |up>          (ground state first)
//   two qubits   : |dd>, |du>, |ud>, |uu> (system (x) ancilla)
// so sigma_z = diag(1, -1) and H_S = -(w/2) sigma_z puts the ground energy at -w/2.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "ri/errors.hpp"

namespace ri::linalg {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using Mat2 = Eigen::Matrix<Complex<Real>, 2, 2>;

template <typename Real>
using Mat4 = Eigen::Matrix<Complex<Real>, 4, 4>;

using C2Matrix = Mat2<double>;
using C4Matrix = Mat4<double>;

inline constexpr double kStructuralTol = 1e-12;

enum class Axis { x, y, z, id };

template <typename Real = double>
Mat2<Real> pauli(Axis axis) {
    using C = Complex<Real>;
    Mat2<Real> m;
    switch (axis) {
    case Axis::x:
        m << C(0), C(1), C(1), C(0);
        break;
    case Axis::y:
        m << C(0), C(0, -1), C(0, 1), C(0);
        break;
    case Axis::z:
        m << C(1), C(0), C(0), C(-1);
        break;
    case Axis::id:
        m.setIdentity();
        break;
    }
    return m;
}

// Largest |A - A^dagger| entry.
template <typename Derived>
auto hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = kStructuralTol) {
    return hermiticity_defect(a) <= tol;
}

// Largest |U^dagger U - 1| entry.
template <typename Derived>
auto unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
    using Plain = typename Derived::PlainObject;
    return (u.adjoint() * u - Plain::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = kStructuralTol) {
    return unitarity_defect(u) <= tol;
}

// Coefficients of h = a*1 + bx*sx + by*sy + bz*sz for Hermitian h.
template <typename Real>
struct PauliDecomposition {
    Real a{};
    Eigen::Matrix<Real, 3, 1> b = Eigen::Matrix<Real, 3, 1>::Zero();
};

template <typename Real>
PauliDecomposition<Real> pauli_decompose(const Mat2<Real>& h) {
    PauliDecomposition<Real> d;
    d.a = Real(0.5) * (h(0, 0).real() + h(1, 1).real());
    d.b(0) = h(0, 1).real();
    d.b(1) = -h(0, 1).imag();
    d.b(2) = Real(0.5) * (h(0, 0).real() - h(1, 1).real());
    return d;
}

// exp(-i h t) for Hermitian h, from the closed form
//   e^{-iat} [cos(|b|t) 1 - i sin(|b|t) (b/|b|).sigma].
template <typename Real>
Mat2<Real> exp_2x2_hermitian(const Mat2<Real>& h, Real t) {
    if (!is_hermitian(h)) {
        throw ContractViolation("exp_2x2_hermitian: input is not Hermitian");
    }
    using C = Complex<Real>;
    const auto d = pauli_decompose(h);
    const C global = std::exp(C(0, -d.a * t));
    const Real norm = d.b.norm();

    Mat2<Real> out = Mat2<Real>::Identity();
    if (norm == Real(0)) {
        return global * out;
    }
    const Real c = std::cos(norm * t);
    const Real s = std::sin(norm * t);
    const Eigen::Matrix<Real, 3, 1> n = d.b / norm;
    // -i s (n . sigma)
    out(0, 0) = C(c, -s * n(2));
    out(1, 1) = C(c, s * n(2));
    out(0, 1) = C(0, -s) * C(n(0), -n(1));
    out(1, 0) = C(0, -s) * C(n(0), n(1));
    return global * out;
}

// Kronecker product in system (x) ancilla order.
template <typename Real>
Mat4<Real> kron(const Mat2<Real>& a, const Mat2<Real>& b) {
    Mat4<Real> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

// Tr_A without normalisation checks; linear in rho, accepts any 4x4.
template <typename Real>
Mat2<Real> partial_trace_ancilla_unchecked(const Mat4<Real>& rho) {
    Mat2<Real> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
    return out;
}

template <typename Real>
Mat2<Real> partial_trace_ancilla(const Mat4<Real>& rho) {
    if (std::abs(rho.trace() - Complex<Real>(1)) > kStructuralTol) {
        throw ContractViolation("partial_trace_ancilla: input trace differs from 1");
    }
    if (!is_hermitian(rho)) {
        throw ContractViolation("partial_trace_ancilla: input is not Hermitian");
    }
    return partial_trace_ancilla_unchecked(rho);
}

// Real part of Tr[a b].
template <typename DerivedA, typename DerivedB>
auto trace_product(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    return (a.transpose().cwiseProduct(b)).sum().real();
}

} // namespace ri::linalg
