#pragma once

#include "specbasis/complex_matrix.hpp"
#include "specbasis/monomial.hpp"
#include "specbasis/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace specbasis {

/// Hadamard candidate: square +-1 integer matrix. Verification is exact
/// integer arithmetic, never floating point.
struct HMatrix {
    int n = 0;
    std::vector<int> a;  // row-major

    int operator()(int i, int j) const { return a[size_t(i) * n + j]; }
    int& operator()(int i, int j) { return a[size_t(i) * n + j]; }

    friend bool operator==(const HMatrix& x, const HMatrix& y) {
        return x.n == y.n && x.a == y.a;
    }
    friend bool operator!=(const HMatrix& x, const HMatrix& y) { return !(x == y); }
};

inline HMatrix make_hmatrix(int n) {
    if (n < 1) throw std::invalid_argument("HMatrix: order must be >= 1");
    HMatrix h;
    h.n = n;
    h.a.assign(size_t(n) * n, 1);
    return h;
}

/// Order-2^m Hadamard matrix by recursive doubling:
/// H_1 = [1], H_{2s} = [[H_s, H_s], [H_s, -H_s]].
inline HMatrix sylvester(int m) {
    if (m < 0) throw std::invalid_argument("sylvester: exponent must be >= 0");
    HMatrix h = make_hmatrix(1);
    for (int step = 0; step < m; ++step) {
        const int s = h.n;
        HMatrix d = make_hmatrix(2 * s);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                const int v = h(i, j);
                d(i, j) = v;
                d(i, j + s) = v;
                d(i + s, j) = v;
                d(i + s, j + s) = -v;
            }
        h = std::move(d);
    }
    return h;
}

/// Checks entries in {+1,-1} and H^t H = n I, both in exact integers.
inline VerificationReport verify_hadamard(const HMatrix& h) {
    VerificationReport rep;
    int bad_entries = 0;
    for (int v : h.a)
        if (v != 1 && v != -1) ++bad_entries;
    rep.add("entries_pm1", bad_entries == 0, double(bad_entries));

    std::int64_t worst = 0;
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < h.n; ++j) {
            std::int64_t dot = 0;
            for (int r = 0; r < h.n; ++r)
                dot += std::int64_t(h(r, i)) * h(r, j);
            const std::int64_t want = (i == j) ? h.n : 0;
            const std::int64_t dev = dot > want ? dot - want : want - dot;
            if (dev > worst) worst = dev;
        }
    rep.add("gram_is_n_times_identity", worst == 0, double(worst));
    return rep;
}

inline CMatrix hmatrix_to_dense(const HMatrix& h) {
    CMatrix out(h.n, h.n);
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < h.n; ++j) out(i, j) = Complex(double(h(i, j)), 0.0);
    return out;
}

/// Q_H(k,l) as an exact monomial with phase modulus 2: row j holds h_{j,l}
/// in column (j+k) mod n.
inline Monomial hadamard_monomial(const HMatrix& h, int k, int l) {
    std::vector<int> perm(size_t(h.n)), ph(size_t(h.n));
    for (int j = 0; j < h.n; ++j) {
        perm[size_t(j)] = (j + k) % h.n;
        ph[size_t(j)] = h(j, l) == 1 ? 0 : 1;
    }
    return make_monomial(std::move(perm), std::move(ph), 2);
}

/// Diagonality diagnostic: D^p == D^{*p} (matrix power vs entrywise power)
/// for every exponent p in 3..max(m,4). Both parities are always included
/// because permutation patterns can satisfy odd exponents alone (the 2x2
/// swap has X^3 = X = X^{*3} but fails at p = 4).
inline bool diagonal_power_property(const CMatrix& d, int m, double tol = kDefaultTol) {
    if (m < 3) throw std::invalid_argument("diagonal_power_property: exponent must be >= 3");
    require_square(d, "diagonal_power_property");
    const int top = m < 4 ? 4 : m;
    CMatrix mat_pow = d * d;
    CMatrix ent_pow = d.cwiseProduct(d);
    for (int p = 3; p <= top; ++p) {
        mat_pow = mat_pow * d;
        ent_pow = ent_pow.cwiseProduct(d);
        if (!approx_eq(mat_pow, ent_pow, tol)) return false;
    }
    return true;
}

}  // namespace specbasis
