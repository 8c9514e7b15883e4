#pragma once

#include "specbasis/basis.hpp"
#include "specbasis/complex_matrix.hpp"
#include "specbasis/cyclotomic.hpp"
#include "specbasis/hadamard.hpp"
#include "specbasis/monomial.hpp"
#include "specbasis/rational.hpp"
#include "specbasis/report.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specbasis {

/// Finite matrix group enumerated in exact monomial arithmetic.
/// `closed` records whether the BFS reached a fixed point within the cap.
struct GroupTable {
    int n = 0;
    std::vector<Monomial> elements;  // sorted, pairwise distinct
    std::vector<std::pair<int, int>> generator_labels;
    bool closed = false;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(const Monomial& g) const {
        return std::binary_search(elements.begin(), elements.end(), g);
    }
};

/// Breadth-first closure under monomial products starting from the
/// identity. Stops at a fixed point, or once the element count exceeds
/// `cap` (then `closed` is false and the table holds what was found).
inline GroupTable enumerate_group(const std::vector<Monomial>& generators, std::size_t cap,
                                  std::vector<std::pair<int, int>> generator_labels = {}) {
    if (generators.empty())
        throw std::invalid_argument("enumerate_group: at least one generator required");
    const int n = generators.front().n;
    for (const auto& g : generators)
        if (g.n != n) throw std::invalid_argument("enumerate_group: mixed dimensions");

    GroupTable table;
    table.n = n;
    table.generator_labels = std::move(generator_labels);

    std::set<Monomial> seen;
    std::deque<Monomial> queue;
    seen.insert(identity_monomial(n));
    queue.push_back(identity_monomial(n));
    bool capped = false;

    while (!queue.empty() && !capped) {
        const Monomial cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Monomial next = monomial_compose(cur, g);
            if (seen.insert(next).second) {
                if (seen.size() > cap) {
                    capped = true;
                    break;
                }
                queue.push_back(std::move(next));
            }
        }
    }

    table.closed = !capped;
    table.elements.assign(seen.begin(), seen.end());
    return table;
}

inline std::vector<Monomial> fourier_monomials(int n) {
    std::vector<Monomial> gens;
    gens.reserve(size_t(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) gens.push_back(fourier_monomial(n, k, l));
    return gens;
}

inline std::vector<Monomial> hadamard_monomials(const HMatrix& h) {
    std::vector<Monomial> gens;
    gens.reserve(size_t(h.n) * h.n);
    for (int k = 0; k < h.n; ++k)
        for (int l = 0; l < h.n; ++l) gens.push_back(hadamard_monomial(h, k, l));
    return gens;
}

inline std::vector<std::pair<int, int>> all_labels(int n) {
    std::vector<std::pair<int, int>> labels;
    labels.reserve(size_t(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) labels.emplace_back(k, l);
    return labels;
}

/// Group generated by the clock-and-shift family; order is n^3, inside the
/// n^(n+1) bound.
inline GroupTable fourier_group(int n, std::size_t cap) {
    return enumerate_group(fourier_monomials(n), cap, all_labels(n));
}

/// Group generated by the Hadamard-induced family (phase modulus 2);
/// order is bounded by n * 2^n.
inline GroupTable hadamard_group(const HMatrix& h, std::size_t cap) {
    return enumerate_group(hadamard_monomials(h), cap, all_labels(h.n));
}

/// Parameters of a phased cyclic shift w_n^offset * B(shift, slope).
struct PhasedShift {
    int n = 0;
    int shift = 0;
    int slope = 0;
    int offset = 0;
};

/// Recognize g as w_n^m0 * B(k,l): the permutation must be the cyclic
/// shift by k and the phases affine in the row index once the modulus is
/// embedded alongside n.
inline std::optional<PhasedShift> as_phased_shift(const Monomial& g) {
    const int n = g.n;
    const int k = g.perm[0];
    for (int j = 0; j < n; ++j)
        if (g.perm[size_t(j)] != (j + k) % n) return std::nullopt;

    const long long big = std::lcm<long long>(g.m, n);
    const long long q = big / n, s = big / g.m;
    const long long a0 = (static_cast<long long>(g.phase_exp[0]) * s) % big;
    if (a0 % q != 0) return std::nullopt;
    const int offset = static_cast<int>((a0 / q) % n);
    int slope = 0;
    if (n > 1) {
        long long diff =
            ((static_cast<long long>(g.phase_exp[1]) - g.phase_exp[0]) * s % big + big) % big;
        if (diff % q != 0) return std::nullopt;
        slope = static_cast<int>((diff / q) % n);
    }
    for (int j = 0; j < n; ++j) {
        const long long want = (q * ((static_cast<long long>(j) * slope + offset) % n)) % big;
        const long long have = (static_cast<long long>(g.phase_exp[size_t(j)]) * s) % big;
        if (want != have) return std::nullopt;
    }
    return PhasedShift{n, k, slope, offset};
}

/// The permutation representation of the clock-and-shift group:
/// w^m B(k,l) maps to the n^2 x n^2 0/1 matrix whose block (u, (u+k) mod n)
/// is P^((u*l+m) mod n), P the shift-by-one. The free index in the inner
/// sum is bound to the outer block index u and the global phase w^m to an
/// extra inner shift; this is the unique binding under which the map is
/// multiplicative on the whole group.
inline CMatrix rep_t(const Monomial& g) {
    const auto ps = as_phased_shift(g);
    if (!ps)
        throw std::invalid_argument(
            "rep_t: monomial is not a phased cyclic shift (not in the clock-and-shift group)");
    const int n = ps->n;
    CMatrix out = CMatrix::Zero(n * n, n * n);
    for (int u = 0; u < n; ++u) {
        const int bc = (u + ps->shift) % n;
        const int s = static_cast<int>((static_cast<long long>(u) * ps->slope + ps->offset) % n);
        for (int v = 0; v < n; ++v) out(u * n + v, bc * n + (v + s) % n) = Complex(1.0, 0.0);
    }
    return out;
}

/// Linear extension of rep_t: expand in the clock-and-shift basis and map
/// each element through the group representation.
inline CMatrix rep_t_linear(const CMatrix& a) {
    require_square(a, "rep_t_linear");
    const int n = static_cast<int>(a.rows());
    const BasisSet f = fourier_basis(n);
    const CoeffTable c = analyze(a, f);
    CMatrix out = CMatrix::Zero(n * n, n * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            if (std::abs(c.coeffs(k, l)) == 0.0) continue;
            out += c.coeffs(k, l) * rep_t(fourier_monomial(n, k, l));
        }
    return out;
}

namespace detail {
inline CMatrix sigma_block(int sign) {
    CMatrix b(2, 2);
    if (sign >= 0) {
        b << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0);
    } else {
        b << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    }
    return b;
}
}  // namespace detail

/// The Hadamard-group representation: a signed permutation matrix (monomial
/// with phase modulus dividing 2) maps to the 2n x 2n permutation matrix
/// with block sigma(sign_j) at (j, perm[j]), sigma(+1) = I_2 and
/// sigma(-1) = the swap. Exactly multiplicative because sigma is a
/// homomorphism from {+-1} into S_2.
inline CMatrix rep_r_monomial(const Monomial& g) {
    if (g.m != 1 && g.m != 2)
        throw std::invalid_argument(
            "rep_r_monomial: monomial is not a signed permutation (phase modulus must divide 2)");
    const int n = g.n;
    CMatrix out = CMatrix::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        const int sign = (g.m == 2 && g.phase_exp[size_t(j)] == 1) ? -1 : 1;
        out.block(2 * j, 2 * g.perm[size_t(j)], 2, 2) = detail::sigma_block(sign);
    }
    return out;
}

/// Linear-extension map into 2n x 2n matrices:
/// R(A) = sum_{k,l} n^{-1} <A, Q_H(k,l)> sum_j (e_j e^t_{j+k}) (x) sigma(h_{j,l}).
/// Additive and injective for any Hadamard H; its restriction to signed
/// basis products is NOT the group map above whenever the product carries a
/// -1 scalar, and check_homomorphism measures exactly how often.
inline CMatrix rep_r(const CMatrix& a, const HMatrix& h) {
    require_square(a, "rep_r");
    const int n = static_cast<int>(a.rows());
    if (h.n != n) throw std::invalid_argument("rep_r: matrix and Hadamard order mismatch");
    const BasisSet q = hadamard_basis(h);
    CMatrix out = CMatrix::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const Complex coeff = frob_inner(a, q.element(k, l)) / double(n);
            if (std::abs(coeff) == 0.0) continue;
            for (int j = 0; j < n; ++j)
                out.block(2 * j, 2 * ((j + k) % n), 2, 2) += coeff * detail::sigma_block(h(j, l));
        }
    return out;
}

/// Entries 0/1 with exactly one 1 per row and column, compared exactly.
inline bool is_permutation_matrix(const CMatrix& p) {
    if (p.rows() != p.cols()) return false;
    const int n = static_cast<int>(p.rows());
    std::vector<int> row_ones(size_t(n), 0), col_ones(size_t(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Complex v = p(i, j);
            if (v == Complex(1.0, 0.0)) {
                ++row_ones[size_t(i)];
                ++col_ones[size_t(j)];
            } else if (v != Complex(0.0, 0.0)) {
                return false;
            }
        }
    for (int i = 0; i < n; ++i)
        if (row_ones[size_t(i)] != 1 || col_ones[size_t(i)] != 1) return false;
    return true;
}

enum class MapKind { t_group, t_linear, r_map };

inline MapKind map_kind_from_string(const std::string& s) {
    if (s == "T_group" || s == "t_group") return MapKind::t_group;
    if (s == "T_linear" || s == "t_linear") return MapKind::t_linear;
    if (s == "R" || s == "r") return MapKind::r_map;
    throw std::invalid_argument("unknown map kind: " + s);
}

/// Per-identity homomorphism testing. Checks are assertions a correct build
/// must pass; "rejected" checks are inverted, passing when an identity that
/// cannot hold (e.g. T(A1+A2) = T(A1)*T(A2), which mixes addition with the
/// product of images) indeed fails. Observations carry measured deviations
/// and failure fractions as plain data, not verdicts.
inline VerificationReport check_homomorphism(MapKind kind, int n, const HMatrix* h, int samples,
                                             std::uint64_t seed = 12345,
                                             double tol = kDefaultTol) {
    if (samples < 1) throw std::invalid_argument("check_homomorphism: samples must be >= 1");
    VerificationReport rep;
    std::mt19937_64 rng(seed);

    if (kind == MapKind::t_group) {
        if (n < 1) throw std::invalid_argument("check_homomorphism: n must be >= 1");
        const std::size_t cap = 4 * std::size_t(n) * n * n;
        const GroupTable table = fourier_group(n, cap);
        rep.add("t_group_closed", table.closed, 0.0);
        rep.observe("group_order", double(table.order()));

        std::vector<CMatrix> images;
        images.reserve(size_t(table.order()));
        bool perm_ok = true;
        for (const auto& g : table.elements) {
            images.push_back(rep_t(g));
            perm_ok = perm_ok && is_permutation_matrix(images.back());
        }
        rep.add("t_group_images_permutation", perm_ok, 0.0);

        double worst = 0.0;
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::size_t j = 0; j < images.size(); ++j) {
                const Monomial prod = monomial_compose(table.elements[i], table.elements[j]);
                const double dev = (rep_t(prod) - images[i] * images[j]).norm();
                if (dev > worst) worst = dev;
            }
        rep.add("t_group_multiplicative", worst == 0.0, worst);

        std::set<std::string> distinct;
        for (const auto& img : images) {
            std::string key;
            key.reserve(size_t(img.size()));
            for (int r = 0; r < img.rows(); ++r)
                for (int c = 0; c < img.cols(); ++c)
                    key.push_back(img(r, c) == Complex(1.0, 0.0) ? '1' : '0');
            distinct.insert(std::move(key));
        }
        rep.add("t_group_injective", distinct.size() == images.size(),
                double(images.size() - distinct.size()));
        return rep;
    }

    if (kind == MapKind::t_linear) {
        if (n < 1) throw std::invalid_argument("check_homomorphism: n must be >= 1");
        double worst_consistency = 0.0;
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                const Monomial g = fourier_monomial(n, k, l);
                const double dev = (rep_t_linear(monomial_to_dense(g)) - rep_t(g)).norm();
                worst_consistency = std::max(worst_consistency, dev);
            }
        rep.add("t_linear_matches_group_on_basis", worst_consistency <= tol, worst_consistency);

        double worst_add = 0.0, crossed_dev = 0.0, worst_mult = 0.0;
        auto probe = [&](const CMatrix& a1, const CMatrix& a2) {
            const CMatrix t1 = rep_t_linear(a1), t2 = rep_t_linear(a2);
            worst_add = std::max(worst_add, (rep_t_linear(a1 + a2) - (t1 + t2)).norm());
            crossed_dev = std::max(crossed_dev, (rep_t_linear(a1 + a2) - t1 * t2).norm());
            worst_mult = std::max(worst_mult, (rep_t_linear(a1 * a2) - t1 * t2).norm());
        };
        const CMatrix eye = CMatrix::Identity(n, n);
        probe(eye, eye);
        probe(monomial_to_dense(fourier_monomial(n, 1 % n, 0)),
              monomial_to_dense(fourier_monomial(n, 1 % n, 0)));
        for (int s = 0; s < samples; ++s) probe(random_matrix(n, rng), random_matrix(n, rng));

        rep.add("t_linear_additive", worst_add <= tol, worst_add);
        rep.add("additive_product_identity_rejected", crossed_dev > tol, crossed_dev);
        rep.observe("additive_product_identity_max_deviation", crossed_dev,
                    "T(A1+A2) vs T(A1)*T(A2)");
        rep.observe("t_linear_multiplicativity_max_deviation", worst_mult,
                    "T(A1*A2) vs T(A1)*T(A2) on the same inputs; measured, not asserted");
        return rep;
    }

    // r_map
    if (h == nullptr)
        throw std::invalid_argument("check_homomorphism: the R map needs a Hadamard matrix");
    const int hn = h->n;
    const std::vector<Monomial> qmono = hadamard_monomials(*h);

    bool perm_ok = true;
    double worst_match = 0.0;
    std::vector<CMatrix> images;
    images.reserve(qmono.size());
    for (const auto& g : qmono) {
        images.push_back(rep_r_monomial(g));
        perm_ok = perm_ok && is_permutation_matrix(images.back());
        worst_match =
            std::max(worst_match, (rep_r(monomial_to_dense(g), *h) - images.back()).norm());
    }
    rep.add("r_images_permutation_on_basis", perm_ok, 0.0);
    rep.add("r_linear_matches_group_on_basis", worst_match <= tol, worst_match);

    double worst_group = 0.0, worst_linear_pairs = 0.0;
    int linear_pair_failures = 0;
    for (std::size_t i = 0; i < qmono.size(); ++i)
        for (std::size_t j = 0; j < qmono.size(); ++j) {
            const Monomial prod = monomial_compose(qmono[i], qmono[j]);
            const double dev_group = (rep_r_monomial(prod) - images[i] * images[j]).norm();
            worst_group = std::max(worst_group, dev_group);
            const double dev_linear =
                (rep_r(monomial_to_dense(prod), *h) - images[i] * images[j]).norm();
            worst_linear_pairs = std::max(worst_linear_pairs, dev_linear);
            if (dev_linear > tol) ++linear_pair_failures;
        }
    rep.add("r_group_multiplicative_on_basis_pairs", worst_group == 0.0, worst_group);
    rep.observe("r_linear_mult_basis_pair_failures", double(linear_pair_failures),
                "pairs where the displayed linear formula disagrees with the group product");
    rep.observe("r_linear_mult_basis_pair_fail_fraction",
                double(linear_pair_failures) / double(qmono.size() * qmono.size()));
    rep.observe("r_linear_mult_basis_pairs_max_deviation", worst_linear_pairs);

    double worst_add = 0.0;
    double worst_inject = 0.0;
    for (int s = 0; s < samples; ++s) {
        const CMatrix a = random_matrix(hn, rng), b = random_matrix(hn, rng);
        const CMatrix ra = rep_r(a, *h), rb = rep_r(b, *h);
        worst_add = std::max(worst_add, (rep_r(a + b, *h) - (ra + rb)).norm());
        // distinct inputs must give distinct images
        if ((a - b).norm() > tol) {
            const double gap = (ra - rb).norm();
            worst_inject = std::max(worst_inject, gap <= tol ? 1.0 : 0.0);
        }
    }
    rep.add("r_linear_additive", worst_add <= tol, worst_add);
    rep.add("r_linear_injective_random", worst_inject == 0.0, worst_inject);
    return rep;
}

/// Complex-free encoding: each entry sum_d c_d w^d of a cyclotomic matrix
/// becomes the m x m rational circulant sum_d c_d P^d, giving an injective
/// ring homomorphism into nm x nm rational matrices.
inline RatMatrix cyclotomic_encode(const CycMatrix& a) {
    const int n = a.dim(), m = a.modulus();
    RatMatrix e(n * m, n * m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    e(i * m + r, k * m + c) = a(i, k).coeff(((c - r) % m + m) % m);
    return e;
}

/// Inverse of the encoding: every m x m block must be circulant; the first
/// row of each block is its coefficient vector.
inline CycMatrix cyclotomic_decode(const RatMatrix& e, int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("cyclotomic_decode: bad shape parameters");
    if (e.rows() != n * m || e.cols() != n * m)
        throw std::invalid_argument("cyclotomic_decode: matrix is not (n*m) x (n*m)");
    CycMatrix a(n, m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Cyclotomic z(m);
            for (int d = 0; d < m; ++d) z.coeff(d) = e(i * m, k * m + d);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    if (e(i * m + r, k * m + c) != z.coeff(((c - r) % m + m) % m))
                        throw std::invalid_argument(
                            "cyclotomic_decode: block (" + std::to_string(i) + "," +
                            std::to_string(k) + ") is not circulant");
            a(i, k) = std::move(z);
        }
    return a;
}

}  // namespace specbasis
