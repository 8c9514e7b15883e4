#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace specbasis;
using namespace testutil;

TEST_CASE("structure constants") {
    const StructureTable t2 = structure_constants(2);
    REQUIRE(t2.phase(1, 0, 0, 1) == 1);  // B(1,0) B(0,1) = -B(1,1)

    const StructureTable t5 = structure_constants(5);
    for (int l = 0; l < 5; ++l)
        for (int k = 0; k < 5; ++k) REQUIRE(t5.phase(0, l, k, 0) == 0);

    REQUIRE(structure_constants(3).phase(2, 1, 1, 2) == 1);  // (2*2) mod 3

    // exhaustive validation against dense products (monomial arithmetic is
    // already checked at construction; this re-checks through the floats)
    for (int n = 2; n <= 6; ++n) {
        const StructureTable t = structure_constants(n);
        const BasisSet f = fourier_basis(n);
        for (int k1 = 0; k1 < n; ++k1)
            for (int l1 = 0; l1 < n; ++l1)
                for (int k2 = 0; k2 < n; ++k2)
                    for (int l2 = 0; l2 < n; ++l2) {
                        const CMatrix lhs = f.element(k1, l1) * f.element(k2, l2);
                        const CMatrix rhs = unit_root(n, t.phase(k1, l1, k2, l2)) *
                                            f.element((k1 + k2) % n, (l1 + l2) % n);
                        REQUIRE((lhs - rhs).norm() < 1e-12);
                    }
    }
}

TEST_CASE("twisted convolution on delta tables") {
    const int n = 2;
    CoeffTable a(n), b(n);
    a.coeffs(1, 0) = 1.0;
    b.coeffs(0, 1) = 1.0;
    const CoeffTable out = twisted_convolution(a, b);
    REQUIRE(std::abs(out.coeffs(1, 1) - Complex(-1.0, 0.0)) < 1e-15);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (k != 1 || l != 1) REQUIRE(std::abs(out.coeffs(k, l)) == 0.0);

    // the identity table is the unit of the convolution
    CoeffTable eye(3), rhs(3);
    eye.coeffs(0, 0) = 1.0;
    std::mt19937_64 rng(2);
    rhs.coeffs = random_matrix(3, rng);
    const CoeffTable prod = twisted_convolution(eye, rhs);
    REQUIRE((prod.coeffs - rhs.coeffs).norm() < 1e-14);
}

TEST_CASE("convolution mirrors matrix multiplication") {
    std::mt19937_64 rng(13);
    for (int n = 2; n <= 8; ++n) {
        const BasisSet f = fourier_basis(n);
        for (int t = 0; t < 8; ++t) {
            const CMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
            const CoeffTable conv = twisted_convolution(analyze(a, f), analyze(b, f));
            const CoeffTable direct = analyze(a * b, f);
            REQUIRE((conv.coeffs - direct.coeffs).norm() <= 1e-10);
        }
    }
}

TEST_CASE("twisted convolution is associative but not commutative") {
    std::mt19937_64 rng(19);
    for (int n : {2, 3, 5}) {
        CoeffTable a(n), b(n), c(n);
        a.coeffs = random_matrix(n, rng);
        b.coeffs = random_matrix(n, rng);
        c.coeffs = random_matrix(n, rng);
        const CoeffTable left = twisted_convolution(twisted_convolution(a, b), c);
        const CoeffTable right = twisted_convolution(a, twisted_convolution(b, c));
        REQUIRE((left.coeffs - right.coeffs).norm() <= 1e-10);
    }

    // witness pair: deltas at (1,0) and (0,1) for n=3 pick up different phases
    CoeffTable d10(3), d01(3);
    d10.coeffs(1, 0) = 1.0;
    d01.coeffs(0, 1) = 1.0;
    const CMatrix ab = twisted_convolution(d10, d01).coeffs;
    const CMatrix ba = twisted_convolution(d01, d10).coeffs;
    REQUIRE((ab - ba).norm() > 0.5);
    REQUIRE(std::abs(ab(1, 1) - unit_root(3, 1)) < 1e-15);
    REQUIRE(std::abs(ba(1, 1) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("multiply_via_transform") {
    std::mt19937_64 rng(29);
    const CMatrix b = random_matrix(3, rng);
    REQUIRE((multiply_via_transform(CMatrix::Identity(3, 3), b) - b).norm() <= 1e-12);

    REQUIRE((multiply_via_transform(pauli_x(), pauli_z()) - y_like() * (-1.0)).norm() <= 1e-12);
    REQUIRE(approx_eq(multiply_via_transform(pauli_x(), pauli_z()), mat2(0, -1, 1, 0), 1e-12));

    for (int n : {2, 4, 8}) {
        const BasisSet f = fourier_basis(n);
        for (int t = 0; t < 50; ++t) {
            const CMatrix a = random_matrix(n, rng), c = random_matrix(n, rng);
            const CMatrix direct = a * c;
            REQUIRE((multiply_via_transform(a, c, f) - direct).norm() <=
                    1e-10 * std::max(1.0, direct.norm()));
        }
    }

    CMatrix small(2, 2), big(3, 3);
    REQUIRE_THROWS_AS(multiply_via_transform(small, big), std::invalid_argument);
}

TEST_CASE("bench_multiply") {
    std::ostringstream csv;
    const auto records = bench_multiply({2}, 3, &csv);
    REQUIRE(records.size() == 2);
    for (const auto& r : records) {
        REQUIRE(r.n == 2);
        REQUIRE(r.max_residual <= 1e-9);
        REQUIRE(r.wall_time_s >= 0.0);
    }
    REQUIRE(records[0].method == "direct");
    REQUIRE(records[1].method == "twisted_conv");

    const std::string text = csv.str();
    REQUIRE(text.rfind("n,method,rep,wall_time_s,residual\n", 0) == 0);
    REQUIRE(text.find("2,direct,0,") != std::string::npos);
    REQUIRE(text.find("2,twisted_conv,2,") != std::string::npos);
    REQUIRE(text.find("2,twisted_conv_kernel,1,") != std::string::npos);

    REQUIRE(bench_multiply({}, 3).empty());
    REQUIRE_THROWS_AS(bench_multiply({2}, 2), std::invalid_argument);

    const auto multi = bench_multiply({4, 8}, 3);
    REQUIRE(multi.size() == 4);
    for (const auto& r : multi) REQUIRE(r.max_residual <= 1e-9);
}
