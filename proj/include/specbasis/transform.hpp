#pragma once

#include "specbasis/basis.hpp"
#include "specbasis/complex_matrix.hpp"
#include "specbasis/monomial.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace specbasis {

/// Phase exponents of the clock-and-shift algebra:
/// B(k1,l1) * B(k2,l2) = w^(k1*l2) * B((k1+k2) mod n, (l1+l2) mod n).
struct StructureTable {
    int n = 0;
    std::vector<int> exponents;  // ((k1*n+l1)*n^2 + k2*n+l2) -> e

    int phase(int k1, int l1, int k2, int l2) const {
        const std::size_t i = std::size_t(k1) * n + l1;
        const std::size_t j = std::size_t(k2) * n + l2;
        return exponents[i * std::size_t(n) * n + j];
    }
};

/// Build e((k1,l1),(k2,l2)) = (k1*l2) mod n; for n <= 6 every entry is
/// validated against the exact monomial product before the table returns.
inline StructureTable structure_constants(int n) {
    if (n < 1) throw std::invalid_argument("structure_constants: dimension must be >= 1");
    StructureTable t;
    t.n = n;
    t.exponents.resize(std::size_t(n) * n * n * n);
    for (int k1 = 0; k1 < n; ++k1)
        for (int l1 = 0; l1 < n; ++l1)
            for (int k2 = 0; k2 < n; ++k2)
                for (int l2 = 0; l2 < n; ++l2) {
                    const int e = static_cast<int>((static_cast<long long>(k1) * l2) % n);
                    const std::size_t i = std::size_t(k1) * n + l1;
                    const std::size_t j = std::size_t(k2) * n + l2;
                    t.exponents[i * std::size_t(n) * n + j] = e;
                }
    if (n <= 6) {
        for (int k1 = 0; k1 < n; ++k1)
            for (int l1 = 0; l1 < n; ++l1)
                for (int k2 = 0; k2 < n; ++k2)
                    for (int l2 = 0; l2 < n; ++l2) {
                        const Monomial lhs = monomial_compose(fourier_monomial(n, k1, l1),
                                                              fourier_monomial(n, k2, l2));
                        const Monomial rhs = monomial_compose(
                            scalar_root_monomial(n, n, t.phase(k1, l1, k2, l2)),
                            fourier_monomial(n, (k1 + k2) % n, (l1 + l2) % n));
                        if (lhs != rhs)
                            throw std::logic_error(
                                "structure_constants: validation against exact products failed");
                    }
    }
    return t;
}

/// Coefficient-domain image of matrix multiplication:
/// out(k,l) = sum_{k1,l1} w^(k1*(l-l1)) cA(k1,l1) cB((k-k1) mod n, (l-l1) mod n).
inline CoeffTable twisted_convolution(const CoeffTable& ca, const CoeffTable& cb) {
    if (ca.n != cb.n) throw std::invalid_argument("twisted_convolution: dimension mismatch");
    const int n = ca.n;
    CoeffTable out(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Complex acc(0.0, 0.0);
            for (int k1 = 0; k1 < n; ++k1)
                for (int l1 = 0; l1 < n; ++l1) {
                    const Complex a = ca.coeffs(k1, l1);
                    if (a == Complex(0.0, 0.0)) continue;
                    const Complex b = cb.coeffs(((k - k1) % n + n) % n, ((l - l1) % n + n) % n);
                    acc += unit_root(n, static_cast<long long>(k1) * (((l - l1) % n + n) % n)) *
                           a * b;
                }
            out.coeffs(k, l) = acc;
        }
    return out;
}

/// A * B computed as synthesize(twisted_convolution(analyze(A), analyze(B))).
inline CMatrix multiply_via_transform(const CMatrix& a, const CMatrix& b,
                                      const BasisSet& fourier) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("multiply_via_transform: dimension mismatch");
    return synthesize(twisted_convolution(analyze(a, fourier), analyze(b, fourier)), fourier);
}

inline CMatrix multiply_via_transform(const CMatrix& a, const CMatrix& b) {
    require_square(a, "multiply_via_transform");
    return multiply_via_transform(a, b, fourier_basis(static_cast<int>(a.rows())));
}

struct BenchRecord {
    int n = 0;
    std::string method;
    double wall_time_s = 0.0;
    double max_residual = 0.0;
};

/// Times direct products against the transform path on random inputs.
/// Returns two median records per dimension (methods "direct" and
/// "twisted_conv"); when `csv` is given, writes one row per rep with
/// columns n,method,rep,wall_time_s,residual, including extra
/// "twisted_conv_kernel" rows for the convolution alone.
inline std::vector<BenchRecord> bench_multiply(const std::vector<int>& n_list, int reps,
                                               std::ostream* csv = nullptr,
                                               std::uint64_t seed = 12345) {
    if (reps < 3) throw std::invalid_argument("bench_multiply: reps must be >= 3");
    using clock = std::chrono::steady_clock;
    auto seconds = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double>(b - a).count();
    };

    if (csv) *csv << "n,method,rep,wall_time_s,residual\n";
    std::vector<BenchRecord> records;
    std::mt19937_64 rng(seed);

    for (int n : n_list) {
        if (n < 1) throw std::invalid_argument("bench_multiply: dimensions must be >= 1");
        const BasisSet fb = fourier_basis(n);
        std::vector<double> t_direct, t_transform;
        double worst_transform = 0.0;

        for (int rep = 0; rep < reps; ++rep) {
            const CMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);

            const auto d0 = clock::now();
            const CMatrix direct = a * b;
            const auto d1 = clock::now();
            t_direct.push_back(seconds(d0, d1));
            if (csv)
                *csv << n << ",direct," << rep << ',' << t_direct.back() << ",0\n";

            const auto e0 = clock::now();
            const CoeffTable ca = analyze(a, fb), cb = analyze(b, fb);
            const auto k0 = clock::now();
            const CoeffTable cc = twisted_convolution(ca, cb);
            const auto k1 = clock::now();
            const CMatrix via = synthesize(cc, fb);
            const auto e1 = clock::now();
            t_transform.push_back(seconds(e0, e1));

            const double residual = (via - direct).norm() / std::max(1.0, direct.norm());
            worst_transform = std::max(worst_transform, residual);
            if (csv) {
                *csv << n << ",twisted_conv," << rep << ',' << t_transform.back() << ','
                     << residual << '\n';
                *csv << n << ",twisted_conv_kernel," << rep << ',' << seconds(k0, k1) << ','
                     << residual << '\n';
            }
        }

        auto median = [](std::vector<double> v) {
            std::sort(v.begin(), v.end());
            return v[v.size() / 2];
        };
        records.push_back({n, "direct", median(t_direct), 0.0});
        records.push_back({n, "twisted_conv", median(t_transform), worst_transform});
    }
    return records;
}

}  // namespace specbasis
