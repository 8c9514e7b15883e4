#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace specbasis;
using namespace testutil;

TEST_CASE("canonical basis") {
    const BasisSet b1 = canonical_basis(1);
    REQUIRE(b1.size() == 1);
    REQUIRE(b1.elements[0](0, 0) == Complex(1.0, 0.0));

    const BasisSet b2 = canonical_basis(2);
    REQUIRE(b2.size() == 4);
    for (const auto& e : b2.elements) {
        REQUIRE(e.cwiseAbs().sum() == 1.0);
        REQUIRE(e.cwiseAbs().maxCoeff() == 1.0);
    }

    // element (i,j) * element (j,k) = element (i,k); zero otherwise
    const int n = 3;
    const BasisSet b = canonical_basis(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    const CMatrix prod = b.element(i, j) * b.element(i2, j2);
                    if (j == i2)
                        REQUIRE(approx_eq(prod, b.element(i, j2), 0.0));
                    else
                        REQUIRE(prod.norm() == 0.0);
                }
}

TEST_CASE("fourier basis at n=2 is the Pauli family, exactly") {
    const BasisSet f = fourier_basis(2);
    REQUIRE((f.element(0, 0) - CMatrix::Identity(2, 2)).norm() == 0.0);
    REQUIRE((f.element(1, 0) - pauli_x()).norm() == 0.0);
    REQUIRE((f.element(0, 1) - pauli_z()).norm() == 0.0);
    REQUIRE((f.element(1, 1) - y_like()).norm() == 0.0);
}

TEST_CASE("fourier basis structure") {
    for (int n : {1, 3, 5}) {
        const BasisSet f = fourier_basis(n);
        REQUIRE(approx_eq(f.element(0, 0), CMatrix::Identity(n, n), 0.0));
    }

    const BasisSet f3 = fourier_basis(3);
    for (int j = 0; j < 3; ++j) {
        REQUIRE(std::abs(f3.element(1, 1)(j, (j + 1) % 3) - unit_root(3, j)) < 1e-15);
    }
    REQUIRE(f3.element(1, 1).cwiseAbs().sum() == Catch::Approx(3.0));

    for (double nsq : f3.norms_sq) REQUIRE(nsq == Catch::Approx(3.0));
}

TEST_CASE("fourier basis orthogonality invariant") {
    const int n = 4;
    const BasisSet f = fourier_basis(n);
    for (int i = 0; i < f.size(); ++i)
        for (int j = 0; j < f.size(); ++j) {
            const Complex ip = frob_inner(f.elements[size_t(i)], f.elements[size_t(j)]);
            if (i == j)
                REQUIRE(std::abs(ip - Complex(n, 0)) < 1e-12);
            else
                REQUIRE(std::abs(ip) < 1e-12);
        }
}

TEST_CASE("unitary basis") {
    SECTION("identity input gives one-hot elements") {
        const int n = 3;
        const BasisSet q = unitary_basis(CMatrix::Identity(n, n));
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                CMatrix expected = CMatrix::Zero(n, n);
                expected(l, (l + k) % n) = 1.0;
                REQUIRE(approx_eq(q.element(k, l), expected, 0.0));
            }
    }

    SECTION("scaled Hadamard input matches the Hadamard basis") {
        const HMatrix h2 = sylvester(1);
        const CMatrix u = hmatrix_to_dense(h2) / std::sqrt(2.0);
        const BasisSet qu = unitary_basis(u);
        const BasisSet qh = hadamard_basis(h2);
        for (int i = 0; i < 4; ++i)
            REQUIRE(approx_eq(std::sqrt(2.0) * qu.elements[size_t(i)], qh.elements[size_t(i)],
                              1e-15));
        for (double nsq : qu.norms_sq) REQUIRE(nsq == Catch::Approx(1.0));
    }

    SECTION("scaled DFT input matches the fourier basis") {
        const int n = 3;
        const CMatrix u = dft_matrix(n) / std::sqrt(double(n));
        const BasisSet qu = unitary_basis(u);
        const BasisSet f = fourier_basis(n);
        for (int i = 0; i < n * n; ++i)
            REQUIRE(approx_eq(std::sqrt(double(n)) * qu.elements[size_t(i)],
                              f.elements[size_t(i)], 1e-12));
    }

    SECTION("non-unitary input is rejected with the residual named") {
        try {
            unitary_basis(2.0 * CMatrix::Identity(2, 2));
            FAIL("expected an exception");
        } catch (const std::invalid_argument& e) {
            REQUIRE(std::string(e.what()).find("not unitary") != std::string::npos);
            REQUIRE(std::string(e.what()).find("||U U+ - I||_F") != std::string::npos);
        }
    }
}

TEST_CASE("hadamard basis") {
    const BasisSet q = hadamard_basis(sylvester(1));
    REQUIRE(approx_eq(q.element(0, 0), CMatrix::Identity(2, 2), 0.0));
    REQUIRE(approx_eq(q.element(0, 1), pauli_z(), 0.0));
    REQUIRE(approx_eq(q.element(1, 0), pauli_x(), 0.0));
    REQUIRE(approx_eq(q.element(1, 1), y_like(), 0.0));

    // Sylvester first column is all ones, so Q(0,0) = I at any order
    for (int m : {2, 3}) {
        const BasisSet qm = hadamard_basis(sylvester(m));
        REQUIRE(approx_eq(qm.element(0, 0), CMatrix::Identity(qm.n, qm.n), 0.0));
        for (double nsq : qm.norms_sq) REQUIRE(nsq == Catch::Approx(double(qm.n)));
    }

    // order-4 family is pairwise orthogonal
    const BasisSet q4 = hadamard_basis(sylvester(2));
    for (int i = 0; i < q4.size(); ++i)
        for (int j = i + 1; j < q4.size(); ++j)
            REQUIRE(std::abs(frob_inner(q4.elements[size_t(i)], q4.elements[size_t(j)])) <
                    1e-12);

    HMatrix bad = make_hmatrix(2);  // all ones, columns not orthogonal
    REQUIRE_THROWS_AS(hadamard_basis(bad), std::invalid_argument);
}

TEST_CASE("analyze picks out labels") {
    const int n = 4;
    const BasisSet f = fourier_basis(n);

    CoeffTable c = analyze(f.element(1, 1), f);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const Complex want = (k == 1 && l == 1) ? Complex(1, 0) : Complex(0, 0);
            REQUIRE(std::abs(c.coeffs(k, l) - want) < 1e-12);
        }

    c = analyze(CMatrix::Identity(n, n), f);
    REQUIRE(std::abs(c.coeffs(0, 0) - Complex(1, 0)) < 1e-12);
    REQUIRE(std::abs(c.coeffs.sum() - Complex(1, 0)) < 1e-12);
}

TEST_CASE("synthesize basic cases") {
    const int n = 3;
    const BasisSet f = fourier_basis(n);
    REQUIRE(synthesize(CoeffTable(n), f).norm() == 0.0);

    CoeffTable delta(n);
    delta.coeffs(2, 1) = 1.0;
    REQUIRE(approx_eq(synthesize(delta, f), f.element(2, 1), 0.0));
}

TEST_CASE("analyze/synthesize round trip on every basis kind") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        const CMatrix a = random_matrix(4, rng);
        const BasisSet f = fourier_basis(4);
        REQUIRE((synthesize(analyze(a, f), f) - a).norm() <= 1e-12 * a.norm());
    }
    for (int n = 2; n <= 8; ++n) {
        for (const BasisSet& b :
             {canonical_basis(n), fourier_basis(n),
              unitary_basis(dft_matrix(n) / std::sqrt(double(n)))}) {
            for (int t = 0; t < 50; ++t) {
                const CMatrix a = random_matrix(n, rng);
                REQUIRE((synthesize(analyze(a, b), b) - a).norm() <= 1e-12 * a.norm());
            }
        }
    }
    for (int m : {1, 2, 3}) {
        const BasisSet q = hadamard_basis(sylvester(m));
        for (int t = 0; t < 50; ++t) {
            const CMatrix a = random_matrix(q.n, rng);
            REQUIRE((synthesize(analyze(a, q), q) - a).norm() <= 1e-12 * a.norm());
        }
    }
}

TEST_CASE("analyze is linear and satisfies Parseval") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n : {2, 3, 5}) {
        const BasisSet f = fourier_basis(n);
        const CMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
        const Complex alpha(u(rng), u(rng)), beta(u(rng), u(rng));
        const CoeffTable mix = analyze(alpha * a + beta * b, f);
        const CMatrix direct = alpha * analyze(a, f).coeffs + beta * analyze(b, f).coeffs;
        REQUIRE((mix.coeffs - direct).norm() < 1e-12);

        double parseval = 0.0;
        const CoeffTable ca = analyze(a, f);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                parseval += f.norms_sq[size_t(f.index_of(k, l))] * std::norm(ca.coeffs(k, l));
        REQUIRE(parseval == Catch::Approx(frob_inner(a, a).real()).epsilon(1e-12));
    }
}

TEST_CASE("verify_orthogonal_complete") {
    REQUIRE(verify_orthogonal_complete(fourier_basis(5)).summary());
    REQUIRE(verify_orthogonal_complete(fourier_basis(5)).find("pairwise_orthogonality")->residual <
            1e-12);
    REQUIRE(verify_orthogonal_complete(hadamard_basis(sylvester(3))).summary());

    BasisSet dup = fourier_basis(2);
    dup.elements[1] = dup.elements[0];  // duplicate breaks orthogonality
    const auto rep = verify_orthogonal_complete(dup);
    REQUIRE_FALSE(rep.summary());
    REQUIRE_FALSE(rep.find("pairwise_orthogonality")->pass);
}

TEST_CASE("verify_full_rank") {
    REQUIRE(verify_full_rank(fourier_basis(4)).summary());
    REQUIRE(verify_full_rank(hadamard_basis(sylvester(2))).summary());
    REQUIRE_FALSE(verify_full_rank(canonical_basis(4)).summary());
    // a zero entry in U zeroes a row of some element
    REQUIRE_FALSE(verify_full_rank(unitary_basis(CMatrix::Identity(3, 3))).summary());
}

TEST_CASE("dft from the fourier basis") {
    {
        const auto [m, rep] = dft_from_fourier_basis(1);
        REQUIRE(m(0, 0) == Complex(1.0, 0.0));
        REQUIRE(rep.summary());
    }
    {
        const auto [m, rep] = dft_from_fourier_basis(2);
        REQUIRE(approx_eq(m, mat2(1, 1, -1, 1), 0.0));
        REQUIRE(rep.summary());
        REQUIRE(unitarity_residual(m / std::sqrt(2.0)) < 1e-15);
    }
    for (int n = 2; n <= 8; ++n) {
        const auto [m, rep] = dft_from_fourier_basis(n);
        REQUIRE(rep.summary());
        REQUIRE(rep.find("scaled_unitarity")->residual <= 1e-12);
        REQUIRE(rep.find("chirp_times_dft_identity")->residual <= 1e-12);
        // chirp diagonal relates M to the plain DFT matrix
        REQUIRE(approx_eq(m, dft_chirp_diagonal(n) * dft_matrix(n), 1e-12));
    }
}
