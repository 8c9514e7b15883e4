#pragma once

#include "specbasis/specbasis.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace testutil {

using namespace specbasis;

inline CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline CMatrix pauli_x() { return mat2(0, 1, 1, 0); }
inline CMatrix pauli_z() { return mat2(1, 0, 0, -1); }
// B(1,1) at n=2; a unit-phase multiple of Pauli Y
inline CMatrix y_like() { return mat2(0, 1, -1, 0); }

inline Monomial random_monomial(int n, int m, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> ph(0, m - 1);
    std::vector<int> phases(static_cast<size_t>(n));
    for (auto& p : phases) p = ph(rng);
    return make_monomial(std::move(perm), std::move(phases), m);
}

inline Rational random_rational(std::mt19937_64& rng, int num_max = 5, int den_max = 4) {
    std::uniform_int_distribution<int> num(-num_max, num_max), den(1, den_max);
    return Rational(num(rng), den(rng));
}

inline Cyclotomic random_cyclotomic(int m, std::mt19937_64& rng) {
    Cyclotomic z(m);
    for (int d = 0; d < m; ++d) z.coeff(d) = random_rational(rng);
    return z;
}

inline CycMatrix random_cyc_matrix(int n, int m, std::mt19937_64& rng) {
    CycMatrix a(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = random_cyclotomic(m, rng);
    return a;
}

}  // namespace testutil
