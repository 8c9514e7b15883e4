#pragma once

#include "specbasis/basis.hpp"
#include "specbasis/complex_matrix.hpp"

#include <Eigen/LU>

#include <optional>
#include <utility>
#include <vector>

namespace specbasis {

/// Certificate that D * (A * B) lands on basis element `closing_label`
/// with D diagonal and D^k = I. `residual` is the largest of the three
/// defect norms re-checked on the stored diagonal. Only the diagonal
/// entries are stored; diag_matrix() renders the full matrix.
struct ClosureWitness {
    std::pair<int, int> pair_a{-1, -1};
    std::pair<int, int> pair_b{-1, -1};
    std::pair<int, int> closing_label{-1, -1};
    Eigen::VectorXcd diag;
    double residual = 0.0;

    CMatrix diag_matrix() const { return CMatrix(diag.asDiagonal()); }
};

struct ClosureReport {
    int k = 0;
    int eligible_elements = 0;
    int eligible_pairs = 0;
    int total_pairs = 0;
    std::vector<ClosureWitness> witnesses;
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> failures;

    bool verdict() const { return failures.empty(); }
};

/// Entrywise eligibility filter of the closure definition:
/// A^{*(k+1)} == A within tolerance.
inline bool entrywise_root_condition(const CMatrix& a, int k, double tol = kDefaultTol) {
    if (k < 1) throw std::invalid_argument("entrywise_root_condition: k must be >= 1");
    return approx_eq(entrywise_power(a, k + 1), a, tol);
}

namespace detail {

inline double diag_power_defect(const Eigen::VectorXcd& d, int k) {
    Eigen::VectorXcd pw = Eigen::VectorXcd::Ones(d.size());
    for (int i = 0; i < k; ++i) pw = pw.cwiseProduct(d);
    return (pw - Eigen::VectorXcd::Ones(d.size())).norm();
}

// Solve C = D * P for diagonal D row by row (D scales rows of P); usable
// whether or not P is invertible. Returns the diagonal and the residual
// max(||D P - C||, ||D^k - I||) or nothing if no consistent D exists.
inline std::optional<std::pair<Eigen::VectorXcd, double>> solve_row_scaling(
    const CMatrix& p, const CMatrix& c, int k, double tol) {
    const int n = static_cast<int>(p.rows());
    Eigen::VectorXcd d = Eigen::VectorXcd::Ones(n);
    for (int i = 0; i < n; ++i) {
        int piv = 0;
        double best = 0.0;
        for (int j = 0; j < n; ++j)
            if (std::abs(p(i, j)) > best) {
                best = std::abs(p(i, j));
                piv = j;
            }
        if (best <= tol) {
            // zero row of P: C's row must vanish too, d_i stays 1
            if (c.row(i).norm() > tol) return std::nullopt;
            continue;
        }
        d(i) = c(i, piv) / p(i, piv);
    }
    const double fit = (d.asDiagonal() * p - c).norm();
    const double pw = diag_power_defect(d, k);
    const double res = std::max(fit, pw);
    if (fit > tol || pw > tol) return std::nullopt;
    return std::make_pair(std::move(d), res);
}

// Absolute patterns of the basis elements, computed once per closure scan.
// Any diagonal D with D^k = I has unit-modulus entries, so C = D*P forces
// |C| == |P| entrywise; candidates are screened on that before the O(n^3)
// work.
struct ClosureScan {
    const BasisSet& basis;
    std::vector<Eigen::MatrixXd> abs_patterns;

    explicit ClosureScan(const BasisSet& b) : basis(b) {
        abs_patterns.reserve(size_t(b.size()));
        for (const auto& e : b.elements) abs_patterns.push_back(e.cwiseAbs());
    }

    std::optional<ClosureWitness> find(const CMatrix& p, int k, double tol) const {
        if (k < 1) throw std::invalid_argument("find_closing_diagonal: k must be >= 1");
        if (p.rows() != basis.n || p.cols() != basis.n)
            throw std::invalid_argument("find_closing_diagonal: dimension mismatch");

        const Eigen::MatrixXd pabs = p.cwiseAbs();
        const double screen = 10.0 * tol * std::max(1.0, pabs.maxCoeff());

        Eigen::FullPivLU<CMatrix> lu(p);
        const bool invertible = lu.isInvertible();
        CMatrix pinv;
        if (invertible) pinv = lu.inverse();

        for (int idx = 0; idx < basis.size(); ++idx) {
            if ((abs_patterns[size_t(idx)] - pabs).cwiseAbs().maxCoeff() > screen) continue;
            const CMatrix& c = basis.elements[size_t(idx)];

            Eigen::VectorXcd d;
            double residual = 0.0;
            if (invertible) {
                const CMatrix full = c * pinv;
                const double off = offdiag_norm(full);
                if (off > tol) continue;
                d = full.diagonal();
                const double fit = (d.asDiagonal() * p - c).norm();
                const double pw = diag_power_defect(d, k);
                if (fit > tol || pw > tol) continue;
                residual = std::max({off, fit, pw});
            } else {
                auto solved = solve_row_scaling(p, c, k, tol);
                if (!solved) continue;
                d = std::move(solved->first);
                residual = solved->second;
            }

            ClosureWitness w;
            w.closing_label = basis.labels[size_t(idx)];
            w.diag = std::move(d);
            w.residual = residual;
            return w;
        }
        return std::nullopt;
    }
};

}  // namespace detail

/// Scan the basis in label order for an element C such that D = C * P^{-1}
/// is diagonal with D^k = I; falls back to a row-wise solve when P is
/// singular, so non-full-rank bases remain testable. The returned witness
/// has its pair labels unset; check_pseudo_closure fills them in.
inline std::optional<ClosureWitness> find_closing_diagonal(const CMatrix& p,
                                                           const BasisSet& basis, int k,
                                                           double tol = kDefaultTol) {
    return detail::ClosureScan(basis).find(p, k, tol);
}

/// Definition check: every ordered pair of eligible elements (both passing
/// the entrywise root condition) must close onto some basis element via a
/// diagonal k-th root of identity.
inline ClosureReport check_pseudo_closure(const BasisSet& basis, int k,
                                          double tol = kDefaultTol) {
    if (k < 1) throw std::invalid_argument("check_pseudo_closure: k must be >= 1");
    ClosureReport rep;
    rep.k = k;
    rep.total_pairs = basis.size() * basis.size();

    std::vector<int> eligible;
    for (int i = 0; i < basis.size(); ++i)
        if (entrywise_root_condition(basis.elements[size_t(i)], k, tol)) eligible.push_back(i);
    rep.eligible_elements = static_cast<int>(eligible.size());
    rep.eligible_pairs = rep.eligible_elements * rep.eligible_elements;

    const detail::ClosureScan scan(basis);
    for (int ia : eligible)
        for (int ib : eligible) {
            const CMatrix prod = basis.elements[size_t(ia)] * basis.elements[size_t(ib)];
            auto w = scan.find(prod, k, tol);
            if (w) {
                w->pair_a = basis.labels[size_t(ia)];
                w->pair_b = basis.labels[size_t(ib)];
                rep.witnesses.push_back(std::move(*w));
            } else {
                rep.failures.emplace_back(basis.labels[size_t(ia)], basis.labels[size_t(ib)]);
            }
        }
    return rep;
}

/// Smallest k <= k_max whose closure verdict is true, if any.
inline std::optional<int> pseudo_closure_order(const BasisSet& basis, int k_max,
                                               double tol = kDefaultTol) {
    if (k_max < 1) throw std::invalid_argument("pseudo_closure_order: k_max must be >= 1");
    for (int k = 1; k <= k_max; ++k)
        if (check_pseudo_closure(basis, k, tol).verdict()) return k;
    return std::nullopt;
}

}  // namespace specbasis
