#pragma once

#include "specbasis/complex_matrix.hpp"
#include "specbasis/hadamard.hpp"
#include "specbasis/monomial.hpp"
#include "specbasis/report.hpp"

#include <Eigen/SVD>

#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specbasis {

enum class BasisKind { canonical, fourier, unitary, hadamard, custom };

inline const char* to_string(BasisKind k) {
    switch (k) {
        case BasisKind::canonical: return "canonical";
        case BasisKind::fourier: return "fourier";
        case BasisKind::unitary: return "unitary";
        case BasisKind::hadamard: return "hadamard";
        case BasisKind::custom: return "custom";
    }
    return "custom";
}

inline BasisKind basis_kind_from_string(const std::string& s) {
    if (s == "canonical") return BasisKind::canonical;
    if (s == "fourier") return BasisKind::fourier;
    if (s == "unitary") return BasisKind::unitary;
    if (s == "hadamard") return BasisKind::hadamard;
    if (s == "custom") return BasisKind::custom;
    throw std::invalid_argument("unknown basis kind: " + s);
}

/// Ordered family of n^2 labeled matrices with cached squared Frobenius
/// norms. Labels (k,l) are stored explicitly and kept in lexicographic
/// order, element (k,l) at index k*n + l.
struct BasisSet {
    int n = 0;
    BasisKind kind = BasisKind::custom;
    std::vector<CMatrix> elements;
    std::vector<std::pair<int, int>> labels;
    std::vector<double> norms_sq;

    int index_of(int k, int l) const { return k * n + l; }
    const CMatrix& element(int k, int l) const { return elements[size_t(index_of(k, l))]; }
    int size() const { return static_cast<int>(elements.size()); }
};

namespace detail {
inline BasisSet finish_basis(int n, BasisKind kind, std::vector<CMatrix> elements) {
    BasisSet b;
    b.n = n;
    b.kind = kind;
    b.elements = std::move(elements);
    b.labels.reserve(size_t(n) * n);
    b.norms_sq.reserve(size_t(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) b.labels.emplace_back(k, l);
    for (const auto& e : b.elements) b.norms_sq.push_back(e.squaredNorm());
    return b;
}
}  // namespace detail

/// The rank-one family e_i e_j^t, labels (i,j).
inline BasisSet canonical_basis(int n) {
    if (n < 1) throw std::invalid_argument("canonical_basis: dimension must be >= 1");
    std::vector<CMatrix> els;
    els.reserve(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMatrix e = CMatrix::Zero(n, n);
            e(i, j) = Complex(1.0, 0.0);
            els.push_back(std::move(e));
        }
    return detail::finish_basis(n, BasisKind::canonical, std::move(els));
}

/// Clock-and-shift family: element (k,l) has w_n^(j*l) at (j, (j+k) mod n).
/// Every element is a unitary monomial matrix; squared norms are all n.
inline BasisSet fourier_basis(int n) {
    if (n < 1) throw std::invalid_argument("fourier_basis: dimension must be >= 1");
    std::vector<CMatrix> els;
    els.reserve(size_t(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) els.push_back(monomial_to_dense(fourier_monomial(n, k, l)));
    return detail::finish_basis(n, BasisKind::fourier, std::move(els));
}

/// Shifted-column family of a unitary U: element (k,l) has u_{j,l} at
/// (j, (j+k) mod n); squared norms are the unit column norms of U.
inline BasisSet unitary_basis(const CMatrix& u, double tol = kDefaultTol) {
    require_square(u, "unitary_basis");
    const double res = unitarity_residual(u);
    if (res > tol) {
        std::ostringstream os;
        os << "unitary_basis: input is not unitary (||U U+ - I||_F = " << res
           << " exceeds tolerance " << tol << ")";
        throw std::invalid_argument(os.str());
    }
    const int n = static_cast<int>(u.rows());
    std::vector<CMatrix> els;
    els.reserve(size_t(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            CMatrix e = CMatrix::Zero(n, n);
            for (int j = 0; j < n; ++j) e(j, (j + k) % n) = u(j, l);
            els.push_back(std::move(e));
        }
    return detail::finish_basis(n, BasisKind::unitary, std::move(els));
}

/// Shifted-column family of a Hadamard matrix; entries in {0,+-1},
/// squared norms all n. Rejects non-Hadamard input.
inline BasisSet hadamard_basis(const HMatrix& h) {
    if (!verify_hadamard(h).summary())
        throw std::invalid_argument("hadamard_basis: input fails the Hadamard checks");
    std::vector<CMatrix> els;
    els.reserve(size_t(h.n) * h.n);
    for (int k = 0; k < h.n; ++k)
        for (int l = 0; l < h.n; ++l) els.push_back(monomial_to_dense(hadamard_monomial(h, k, l)));
    return detail::finish_basis(h.n, BasisKind::hadamard, std::move(els));
}

/// Expansion coefficients of a matrix in a basis, indexed coeffs(k,l).
struct CoeffTable {
    int n = 0;
    CMatrix coeffs;

    CoeffTable() = default;
    explicit CoeffTable(int dim) : n(dim), coeffs(CMatrix::Zero(dim, dim)) {}
};

/// coeff(k,l) = <A, E(k,l)> / ||E(k,l)||^2. The general of the two
/// normalizations: unit-norm and norm-n families share this code path.
inline CoeffTable analyze(const CMatrix& a, const BasisSet& basis) {
    if (a.rows() != basis.n || a.cols() != basis.n)
        throw std::invalid_argument("analyze: matrix/basis dimension mismatch");
    CoeffTable t(basis.n);
    for (int k = 0; k < basis.n; ++k)
        for (int l = 0; l < basis.n; ++l) {
            const int i = basis.index_of(k, l);
            t.coeffs(k, l) = frob_inner(a, basis.elements[size_t(i)]) / basis.norms_sq[size_t(i)];
        }
    return t;
}

inline CMatrix synthesize(const CoeffTable& c, const BasisSet& basis) {
    if (c.n != basis.n)
        throw std::invalid_argument("synthesize: coefficient/basis dimension mismatch");
    CMatrix out = CMatrix::Zero(basis.n, basis.n);
    for (int k = 0; k < basis.n; ++k)
        for (int l = 0; l < basis.n; ++l)
            out += c.coeffs(k, l) * basis.elements[size_t(basis.index_of(k, l))];
    return out;
}

/// Pairwise Frobenius-orthogonality for distinct labels, element count, no
/// zero elements, and cached-norm consistency. The orthogonality residual
/// is the worst |<E_i,E_j>| normalized by the element norms.
inline VerificationReport verify_orthogonal_complete(const BasisSet& basis,
                                                     double tol = kDefaultTol) {
    VerificationReport rep;
    const int count = basis.size();
    const int want = basis.n * basis.n;
    rep.add("element_count", count == want, double(count > want ? count - want : want - count));

    int zero_elements = 0;
    double worst_norm_dev = 0.0;
    for (int i = 0; i < count; ++i) {
        const double nsq = basis.elements[size_t(i)].squaredNorm();
        if (std::sqrt(nsq) <= tol) ++zero_elements;
        const double dev = std::abs(nsq - basis.norms_sq[size_t(i)]) / std::max(1.0, nsq);
        if (dev > worst_norm_dev) worst_norm_dev = dev;
    }
    rep.add("zero_elements", zero_elements == 0, double(zero_elements));
    rep.add("cached_norms_consistent", worst_norm_dev <= tol, worst_norm_dev);

    double worst = 0.0;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            const double denom = std::sqrt(basis.elements[size_t(i)].squaredNorm() *
                                           basis.elements[size_t(j)].squaredNorm());
            if (denom == 0.0) continue;
            const double r =
                std::abs(frob_inner(basis.elements[size_t(i)], basis.elements[size_t(j)])) / denom;
            if (r > worst) worst = r;
        }
    rep.add("pairwise_orthogonality", worst <= tol, worst);
    return rep;
}

/// Per-element rank check: pass iff every singular value clears
/// n * eps * sigma_max. The residual is the worst shortfall of
/// sigma_min/sigma_max below that threshold (0 when all elements pass).
inline VerificationReport verify_full_rank(const BasisSet& basis) {
    VerificationReport rep;
    const double eps = std::numeric_limits<double>::epsilon();
    const double thresh = double(basis.n) * eps;
    bool pass = true;
    double worst_shortfall = 0.0;
    for (const auto& e : basis.elements) {
        Eigen::JacobiSVD<CMatrix> svd(e);
        const double smax = svd.singularValues()(0);
        const double smin = svd.singularValues()(svd.singularValues().size() - 1);
        const double rcond = smax > 0.0 ? smin / smax : 0.0;
        if (rcond <= thresh) {
            pass = false;
            const double shortfall = thresh - rcond;
            if (shortfall > worst_shortfall) worst_shortfall = shortfall;
        }
    }
    rep.add("full_rank", pass, worst_shortfall);
    return rep;
}

/// Standard DFT matrix, entry (a,b) = w_n^(a*b).
inline CMatrix dft_matrix(int n) {
    CMatrix v(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) v(a, b) = unit_root(n, (long long)(a)*b);
    return v;
}

/// Row-phase (chirp) diagonal diag(w_n^(-a^2)) with
/// sum_k B(k,k) = chirp * DFT.
inline CMatrix dft_chirp_diagonal(int n) {
    CMatrix d = CMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a) d(a, a) = unit_root(n, -(long long)(a)*a);
    return d;
}

/// M = sum_k B(k,k). Entry (a,b) is w_n^(a(b-a)), a row-phased DFT:
/// (1/sqrt(n)) M is unitary and M = diag(w^(-a^2)) * DFT elementwise.
inline std::pair<CMatrix, VerificationReport> dft_from_fourier_basis(int n) {
    if (n < 1) throw std::invalid_argument("dft_from_fourier_basis: dimension must be >= 1");
    const BasisSet f = fourier_basis(n);
    CMatrix m = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m += f.element(k, k);

    VerificationReport rep;
    const CMatrix scaled = m / std::sqrt(double(n));
    rep.add("scaled_unitarity", unitarity_residual(scaled) <= kDefaultTol,
            unitarity_residual(scaled));
    const CMatrix related = dft_chirp_diagonal(n) * dft_matrix(n);
    const double chirp_res = (m - related).norm() / std::max(1.0, m.norm());
    rep.add("chirp_times_dft_identity", chirp_res <= kDefaultTol, chirp_res);
    return {std::move(m), std::move(rep)};
}

}  // namespace specbasis
