#pragma once

#include "specbasis/complex_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace specbasis {

/// Exact generalized-permutation (monomial) matrix: row j carries a single
/// unit-modulus entry exp(i 2 pi phase_exp[j] / m) in column perm[j].
///
/// Instances are kept in canonical form (modulus divided down by the gcd of
/// the modulus and all phase exponents), so operator== is semantic equality
/// of the dense renderings and std::set<Monomial> deduplicates exactly.
struct Monomial {
    int n = 0;
    int m = 1;
    std::vector<int> perm;
    std::vector<int> phase_exp;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n == b.n && a.m == b.m && a.perm == b.perm && a.phase_exp == b.phase_exp;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::tie(a.n, a.perm, a.m, a.phase_exp) <
               std::tie(b.n, b.perm, b.m, b.phase_exp);
    }
};

namespace detail {
inline Monomial canonicalize(Monomial g) {
    int gc = g.m;
    for (int p : g.phase_exp) gc = std::gcd(gc, p);
    if (gc > 1) {
        g.m /= gc;
        for (int& p : g.phase_exp) p = (p / gc) % g.m;
    }
    return g;
}
}  // namespace detail

inline Monomial make_monomial(std::vector<int> perm, std::vector<int> phase_exp, int m) {
    const int n = static_cast<int>(perm.size());
    if (n < 1) throw std::invalid_argument("make_monomial: empty permutation");
    if (m < 1) throw std::invalid_argument("make_monomial: phase modulus must be >= 1");
    if (static_cast<int>(phase_exp.size()) != n)
        throw std::invalid_argument("make_monomial: phase vector length mismatch");
    std::vector<char> hit(size_t(n), 0);
    for (int c : perm) {
        if (c < 0 || c >= n || hit[size_t(c)])
            throw std::invalid_argument("make_monomial: perm is not a bijection");
        hit[size_t(c)] = 1;
    }
    for (int& p : phase_exp) {
        p %= m;
        if (p < 0) p += m;
    }
    Monomial g{n, m, std::move(perm), std::move(phase_exp)};
    return detail::canonicalize(std::move(g));
}

inline Monomial identity_monomial(int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::vector<int> ph(static_cast<size_t>(n), 0);
    std::iota(perm.begin(), perm.end(), 0);
    return Monomial{n, 1, std::move(perm), std::move(ph)};
}

/// Exact product: dense(compose(P,Q)) == dense(P) * dense(Q).
/// Phase moduli are merged through their lcm before reduction.
inline Monomial monomial_compose(const Monomial& p, const Monomial& q) {
    if (p.n != q.n)
        throw std::invalid_argument("monomial_compose: dimension mismatch");
    const int n = p.n;
    const long long m = std::lcm<long long>(p.m, q.m);
    if (m > (1LL << 30)) throw std::overflow_error("monomial_compose: modulus overflow");
    const int sp = static_cast<int>(m / p.m), sq = static_cast<int>(m / q.m);
    Monomial r;
    r.n = n;
    r.m = static_cast<int>(m);
    r.perm.resize(size_t(n));
    r.phase_exp.resize(size_t(n));
    for (int j = 0; j < n; ++j) {
        r.perm[size_t(j)] = q.perm[size_t(p.perm[size_t(j)])];
        r.phase_exp[size_t(j)] =
            (p.phase_exp[size_t(j)] * sp + q.phase_exp[size_t(p.perm[size_t(j)])] * sq) % r.m;
    }
    return detail::canonicalize(std::move(r));
}

inline Monomial monomial_inverse(const Monomial& p) {
    Monomial r;
    r.n = p.n;
    r.m = p.m;
    r.perm.resize(size_t(p.n));
    r.phase_exp.resize(size_t(p.n));
    for (int j = 0; j < p.n; ++j) {
        const int c = p.perm[size_t(j)];
        r.perm[size_t(c)] = j;
        r.phase_exp[size_t(c)] = (p.m - p.phase_exp[size_t(j)]) % p.m;
    }
    return detail::canonicalize(std::move(r));
}

inline CMatrix monomial_to_dense(const Monomial& p) {
    CMatrix out = CMatrix::Zero(p.n, p.n);
    for (int j = 0; j < p.n; ++j)
        out(j, p.perm[size_t(j)]) = unit_root(p.m, p.phase_exp[size_t(j)]);
    return out;
}

/// B(k,l) as an exact monomial: row j holds w_n^(j*l) in column (j+k) mod n.
inline Monomial fourier_monomial(int n, int k, int l) {
    if (n < 1) throw std::invalid_argument("fourier_monomial: dimension must be >= 1");
    std::vector<int> perm(static_cast<size_t>(n));
    std::vector<int> ph(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        perm[size_t(j)] = (j + k % n + n) % n;
        ph[size_t(j)] = static_cast<int>((static_cast<long long>(j) * l % n + n) % n);
    }
    return make_monomial(std::move(perm), std::move(ph), n);
}

/// w_m^e * I as a monomial.
inline Monomial scalar_root_monomial(int n, int m, int e) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::vector<int> ph(static_cast<size_t>(n), ((e % m) + m) % m);
    std::iota(perm.begin(), perm.end(), 0);
    return make_monomial(std::move(perm), std::move(ph), m);
}

}  // namespace specbasis
