#pragma once

#include "specbasis/complex_matrix.hpp"
#include "specbasis/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace specbasis {

/// Exact element of Q[x]/(x^m - 1): a rational combination
/// sum_d coeffs[d] * w^d of the m-th roots of unity, with exponents reduced
/// mod m only (no cyclotomic-polynomial reduction). Evaluation at
/// w = exp(i 2 pi / m) is a ring homomorphism to the complex numbers.
class Cyclotomic {
  public:
    Cyclotomic() : m_(1), c_(1) {}
    explicit Cyclotomic(int m) : m_(m), c_(size_t(m)) {
        if (m < 1) throw std::invalid_argument("Cyclotomic: order must be >= 1");
    }

    static Cyclotomic from_rational(int m, const Rational& r) {
        Cyclotomic z(m);
        z.c_[0] = r;
        return z;
    }
    /// w_m^d
    static Cyclotomic root(int m, long long d) {
        Cyclotomic z(m);
        long long r = d % m;
        if (r < 0) r += m;
        z.c_[size_t(r)] = Rational(1);
        return z;
    }

    int modulus() const { return m_; }
    const Rational& coeff(int d) const { return c_[size_t(d)]; }
    Rational& coeff(int d) { return c_[size_t(d)]; }

    bool is_zero() const {
        for (const auto& r : c_)
            if (!r.is_zero()) return false;
        return true;
    }

    Complex eval() const {
        Complex z(0.0, 0.0);
        for (int d = 0; d < m_; ++d)
            if (!c_[size_t(d)].is_zero()) z += c_[size_t(d)].to_double() * unit_root(m_, d);
        return z;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same_modulus(b, "cyclotomic add");
        Cyclotomic z(a.m_);
        for (int d = 0; d < a.m_; ++d) z.c_[size_t(d)] = a.c_[size_t(d)] + b.c_[size_t(d)];
        return z;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same_modulus(b, "cyclotomic subtract");
        Cyclotomic z(a.m_);
        for (int d = 0; d < a.m_; ++d) z.c_[size_t(d)] = a.c_[size_t(d)] - b.c_[size_t(d)];
        return z;
    }
    /// Convolution of coefficient vectors with exponents reduced mod m.
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same_modulus(b, "cyclotomic multiply");
        Cyclotomic z(a.m_);
        for (int d = 0; d < a.m_; ++d) {
            if (a.c_[size_t(d)].is_zero()) continue;
            for (int e = 0; e < a.m_; ++e) {
                if (b.c_[size_t(e)].is_zero()) continue;
                z.c_[size_t((d + e) % a.m_)] += a.c_[size_t(d)] * b.c_[size_t(e)];
            }
        }
        return z;
    }
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) {
        bool first = true;
        for (int d = 0; d < z.m_; ++d) {
            if (z.c_[size_t(d)].is_zero()) continue;
            if (!first) os << " + ";
            os << z.c_[size_t(d)];
            if (d > 0) os << "*w^" << d;
            first = false;
        }
        if (first) os << "0";
        return os;
    }

  private:
    void require_same_modulus(const Cyclotomic& b, const char* op) const {
        if (m_ != b.m_)
            throw std::invalid_argument(std::string(op) + ": root-order mismatch (" +
                                        std::to_string(m_) + " vs " + std::to_string(b.m_) + ")");
    }

    int m_;
    std::vector<Rational> c_;
};

inline Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }

/// Square matrix over a shared cyclotomic ring Q[x]/(x^m - 1).
class CycMatrix {
  public:
    CycMatrix() = default;
    CycMatrix(int n, int m) : n_(n), m_(m), a_(size_t(n) * n, Cyclotomic(m)) {
        if (n < 1) throw std::invalid_argument("CycMatrix: dimension must be >= 1");
    }

    int dim() const { return n_; }
    int modulus() const { return m_; }

    Cyclotomic& operator()(int i, int j) { return a_[size_t(i) * n_ + j]; }
    const Cyclotomic& operator()(int i, int j) const { return a_[size_t(i) * n_ + j]; }

    CMatrix eval() const {
        CMatrix out(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j).eval();
        return out;
    }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        if (a.n_ != b.n_ || a.m_ != b.m_)
            throw std::invalid_argument("CycMatrix: shape or modulus mismatch");
        CycMatrix c(a.n_, a.m_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.a_ == b.a_;
    }
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

  private:
    int n_ = 0;
    int m_ = 1;
    std::vector<Cyclotomic> a_;
};

}  // namespace specbasis
