#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>

namespace specbasis {

using Complex = std::complex<double>;

/// Dense n x n complex matrix, the ambient object of every float-lane
/// computation. Column-major Eigen storage; all public operations below
/// treat it as a plain value type.
using CMatrix = Eigen::MatrixXcd;

/// Default relative-Frobenius tolerance for float-lane comparisons.
inline constexpr double kDefaultTol = 1e-9;

inline void require_square(const CMatrix& a, const char* op) {
    if (a.rows() != a.cols())
        throw std::invalid_argument(std::string(op) + ": matrix is not square (" +
                                    std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + ")");
}

inline void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(op) + ": incompatible operands (" +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
}

/// Frobenius inner product <A, M> = Tr(A M†) = sum_ij A_ij conj(M_ij).
inline Complex frob_inner(const CMatrix& a, const CMatrix& m) {
    require_same_shape(a, m, "frob_inner");
    return (a.array() * m.array().conjugate()).sum();
}

inline double frob_norm(const CMatrix& a) { return a.norm(); }

inline CMatrix entrywise_product(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "entrywise_product");
    return a.cwiseProduct(b);
}

/// Entrywise p-th power (a_ij^p), p >= 1.
inline CMatrix entrywise_power(const CMatrix& a, int p) {
    if (p < 1) throw std::invalid_argument("entrywise_power: exponent must be >= 1");
    CMatrix out = a;
    for (int i = 1; i < p; ++i) out = out.cwiseProduct(a);
    return out;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// ||A - B||_F <= tol * max(1, ||A||_F).
inline bool approx_eq(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol) {
    require_same_shape(a, b, "approx_eq");
    return (a - b).norm() <= tol * std::max(1.0, a.norm());
}

/// ||U U† - I||_F; zero iff U is unitary.
inline double unitarity_residual(const CMatrix& u) {
    require_square(u, "unitarity_residual");
    CMatrix gram = u * u.adjoint();
    gram.diagonal().array() -= 1.0;
    return gram.norm();
}

/// Frobenius mass of the off-diagonal part.
inline double offdiag_norm(const CMatrix& a) {
    CMatrix d = a;
    d.diagonal().setZero();
    return d.norm();
}

inline bool all_finite(const CMatrix& a) {
    return a.allFinite();
}

/// exp(i 2 pi t / order). Quarter turns are snapped to exact values so
/// that order-1/2/4 constructions come out bit-exact.
inline Complex unit_root(long long order, long long t) {
    if (order <= 0) throw std::invalid_argument("unit_root: order must be positive");
    long long r = t % order;
    if (r < 0) r += order;
    if ((4 * r) % order == 0) {
        switch ((4 * r) / order) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    const double theta = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(order);
    return {std::cos(theta), std::sin(theta)};
}

/// Uniform entries in [-1,1] + i[-1,1]; deterministic given the engine state.
inline CMatrix random_matrix(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(u(rng), u(rng));
    return a;
}

}  // namespace specbasis
