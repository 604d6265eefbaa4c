#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mopuc/matcore.hpp"
#include "test_support.hpp"

using namespace mopuc;
using namespace testsupport;

namespace {

HermitianMatrix diag2(double a, double b) {
    CMatrix m = czeros(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return HermitianMatrix(m);
}

}  // namespace

TEST_CASE("psd_classify on explicit spectra") {
    CHECK(psd_classify(HermitianMatrix(identity(3))).cls == PsdClass::PositiveDefinite);
    CHECK(psd_classify(HermitianMatrix(identity(3))).min_eigenvalue == doctest::Approx(1.0));

    const PsdVerdict singular = psd_classify(diag2(1.0, 0.0));
    CHECK(singular.cls == PsdClass::PositiveSemidefiniteSingular);
    CHECK(singular.min_eigenvalue == doctest::Approx(0.0));

    const PsdVerdict indefinite = psd_classify(diag2(1.0, -0.5));
    CHECK(indefinite.cls == PsdClass::Indefinite);
    CHECK(indefinite.min_eigenvalue == doctest::Approx(-0.5));
}

TEST_CASE("psd_classify is invariant under unitary conjugation") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const Index p = 2 + rep % 3;
        const CMatrix h = random_hermitian(rng, p);
        const CMatrix q = random_unitary(rng, p);
        const PsdVerdict a = psd_classify(HermitianMatrix(h));
        const PsdVerdict b = psd_classify(HermitianMatrix(q * h * q.adjoint(), 1e-8));
        CHECK(a.cls == b.cls);
        CHECK(std::abs(a.min_eigenvalue - b.min_eigenvalue) < 1e-10 * std::max(1.0, max_abs(h)));
    }
}

TEST_CASE("psd_classify is scale invariant") {
    std::mt19937_64 rng(8);
    const CMatrix w = random_psd(rng, 3);
    const PsdVerdict a = psd_classify(HermitianMatrix(w));
    const PsdVerdict b = psd_classify(HermitianMatrix(1e8 * w));
    CHECK(a.cls == b.cls);
}

TEST_CASE("principal_sqrt on diagonal and seeded inputs") {
    CHECK(dist(principal_sqrt(HermitianMatrix(identity(2))).mat(), identity(2)) < 1e-14);

    const HermitianMatrix root = principal_sqrt(diag2(4.0, 9.0));
    CHECK(root.mat()(0, 0).real() == doctest::Approx(2.0));
    CHECK(root.mat()(1, 1).real() == doctest::Approx(3.0));

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const CMatrix w = random_psd(rng, 3);
        const CMatrix s = principal_sqrt(HermitianMatrix(w, 1e-8)).mat();
        CHECK(dist(s * s, w) < 1e-10 * std::max(1.0, w.norm()));
        CHECK(psd_classify(HermitianMatrix(s, 1e-8)).positive_semidefinite());
    }
}

TEST_CASE("principal_sqrt rejects indefinite input") {
    CHECK_THROWS_AS(principal_sqrt(diag2(1.0, -1.0)), NotPositiveSemidefinite);
}

TEST_CASE("inv_sqrt identities") {
    CHECK(dist(inv_sqrt(HermitianMatrix(identity(3))).mat(), identity(3)) < 1e-14);

    CMatrix one(1, 1);
    one(0, 0) = 4.0;
    CHECK(inv_sqrt(HermitianMatrix(one)).mat()(0, 0).real() == doctest::Approx(0.5));

    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        const CMatrix w = random_pd(rng, 3);
        const HermitianMatrix h(w, 1e-8);
        const CMatrix r = inv_sqrt(h).mat();
        CHECK(dist(r * w * r, identity(3)) < 1e-8);
        CHECK(dist(r * principal_sqrt(h).mat(), identity(3)) < 1e-9);
    }
}

TEST_CASE("inv_sqrt rejects singular input") {
    CHECK_THROWS_AS(inv_sqrt(diag2(1.0, 0.0)), NotPositiveDefinite);
}

TEST_CASE("contraction_check on explicit cases") {
    const ContractionVerdict zero = contraction_check(czeros(2, 2));
    CHECK(zero.is_contraction);
    CHECK(zero.sigma_max == doctest::Approx(0.0));

    const ContractionVerdict id = contraction_check(identity(2));
    CHECK(id.is_contraction);
    CHECK(id.sigma_max == doctest::Approx(1.0));

    const ContractionVerdict twice = contraction_check(2.0 * identity(2));
    CHECK_FALSE(twice.is_contraction);
    CHECK(twice.sigma_max == doctest::Approx(2.0));
}

TEST_CASE("det matches cofactor expansion") {
    CHECK(det(identity(4)).real() == doctest::Approx(1.0));
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        const CMatrix m = random_complex(rng, 3, 3);
        const Complex expected = cofactor_det(m);
        CHECK(std::abs(det(m) - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("solve basics and error paths") {
    std::mt19937_64 rng(19);
    const CMatrix b = random_complex(rng, 3, 2);
    CHECK(dist(solve(identity(3), b), b) < 1e-14);

    const CMatrix a = random_pd(rng, 3);
    const CMatrix x = solve(a, b);
    CHECK(max_abs(a * x - b) < 1e-8 * max_abs(a) * std::max(1.0, max_abs(x)));

    CMatrix singular = czeros(2, 2);
    singular(0, 0) = 1.0;
    CHECK_THROWS_AS(solve(singular, identity(2)), SingularSystem);
}

TEST_CASE("block_get inverts block_assemble") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        const Index p = 1 + rep % 3;
        std::vector<std::vector<CMatrix>> grid(2, std::vector<CMatrix>(3));
        for (auto& row : grid) {
            for (auto& blk : row) blk = random_complex(rng, p, p);
        }
        const CMatrix m = block_assemble(grid);
        for (Index i = 0; i < 2; ++i) {
            for (Index j = 0; j < 3; ++j) CHECK(dist(block_get(m, i, j, p), grid[i][j]) == 0.0);
        }
    }
}

TEST_CASE("non-finite input is rejected") {
    CMatrix bad = identity(2);
    bad(0, 1) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS_AS(HermitianMatrix{bad}, InvalidInput);
    CHECK_THROWS_AS(det(bad), InvalidInput);
}

TEST_CASE("HermitianMatrix symmetrizes and rejects asymmetry") {
    CMatrix m = identity(2);
    m(0, 1) = Complex(0.0, 1e-12);
    const HermitianMatrix h(m);
    CHECK(dist(h.mat(), h.mat().adjoint()) == 0.0);

    m(0, 1) = 0.5;
    CHECK_THROWS_AS(HermitianMatrix{m}, InvalidInput);
}
