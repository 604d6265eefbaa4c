#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "mopuc/moment_space.hpp"
#include "test_support.hpp"

using namespace mopuc;
using namespace testsupport;

namespace {

constexpr double kPi = std::numbers::pi;

CircleMeasure discrete_uniform(int n, Index p) {
    std::vector<CircleAtom> atoms;
    for (int j = 0; j < n; ++j) {
        atoms.push_back({2.0 * kPi * j / n - kPi, HermitianMatrix(identity(p) / n, 1e-8)});
    }
    return CircleMeasure(p, std::move(atoms));
}

CircleMeasure point_mass(Index p) {
    return CircleMeasure(p, {{0.0, HermitianMatrix(identity(p))}});
}

}  // namespace

TEST_CASE("build_toeplitz structure") {
    const MomentSequence seq = circle_moments(point_mass(2), 1);
    const BlockToeplitz t = build_toeplitz(seq, 1);
    for (Index i = 0; i < 2; ++i) {
        for (Index j = 0; j < 2; ++j) CHECK(dist(block_get(t.base, i, j, 2), identity(2)) == 0.0);
    }
    CHECK(psd_classify(HermitianMatrix(t.base)).min_eigenvalue == doctest::Approx(0.0));

    const MomentSequence useq = circle_moments(discrete_uniform(6, 2), 4);
    CHECK(dist(build_toeplitz(useq, 4).base, identity(10)) < 1e-14);

    const MomentSequence rseq = circle_moments(random_circle_measure({2, 5, false, 7}), 3);
    const CMatrix base = build_toeplitz(rseq, 3).base;
    CHECK(dist(base, base.adjoint()) < 1e-14);
    for (int i = 0; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) {
            CHECK(dist(block_get(base, i, j, 2), rseq.gamma(j - i)) == 0.0);
        }
    }
}

TEST_CASE("membership classification") {
    const CircleMeasure mu = random_circle_measure({2, 5, false, 11});
    const MomentSequence seq = circle_moments(mu, 5);
    for (int m = 0; m <= 4; ++m) CHECK(membership(seq, m).cls == Membership::Interior);
    CHECK(membership(seq, 5).cls == Membership::Boundary);

    const MomentSequence single = circle_moments(point_mass(2), 1);
    CHECK(membership(single, 1).cls == Membership::Boundary);

    const MomentSequence outside(1, {identity(1), 2.0 * identity(1)});
    CHECK(membership(outside, 1).cls == Membership::Outside);
}

TEST_CASE("membership monotonicity") {
    const MomentSequence outside(1, {identity(1), 2.0 * identity(1), czeros(1, 1)});
    CHECK(membership(outside, 1).cls == Membership::Outside);
    CHECK(membership(outside, 2).cls == Membership::Outside);

    const MomentSequence seq = circle_moments(random_circle_measure({3, 6, false, 13}), 5);
    bool interior_so_far = true;
    for (int m = 0; m <= 5; ++m) {
        const Membership cls = membership(seq, m).cls;
        if (cls != Membership::Interior) interior_so_far = false;
        if (interior_so_far) CHECK(cls == Membership::Interior);
        CHECK(cls != Membership::Outside);
    }
}

TEST_CASE("quadratic_form explicit values") {
    const MomentSequence seq = circle_moments(random_circle_measure({2, 4, false, 17}), 3);
    std::vector<CMatrix> b{identity(2), czeros(2, 2), czeros(2, 2)};
    CHECK(quadratic_form(seq, b) == doctest::Approx(seq.gamma(0).real().trace()));
    std::vector<CMatrix> zeros(3, czeros(2, 2));
    CHECK(quadratic_form(seq, zeros) == 0.0);
}

TEST_CASE("quadratic_form against the measure integral") {
    std::mt19937_64 rng(19);
    const CircleMeasure mu = random_circle_measure({2, 5, false, 19});
    const MomentSequence seq = circle_moments(mu, 4);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<CMatrix> b;
        const int m = 1 + rep % 4;
        for (int i = 0; i <= m; ++i) b.push_back(random_complex(rng, 2, 2));
        const double qf = quadratic_form(seq, b);
        CHECK(qf >= -1e-10);
        // oracle: the integral of trace(B(theta) B(theta)^* w) over the atoms
        double expected = 0.0;
        for (const CircleAtom& atom : mu.atoms()) {
            CMatrix bt = czeros(2, 2);
            for (int k = 0; k <= m; ++k) bt += std::polar(1.0, k * atom.theta) * b[k];
            expected += (bt * bt.adjoint() * atom.weight.mat()).trace().real();
        }
        CHECK(qf == doctest::Approx(expected).epsilon(1e-9));
        if (frob(b[0]) > 0) CHECK(qf > 0.0);
    }
}

TEST_CASE("moment_ball explicit cases") {
    const MomentSequence useq = circle_moments(discrete_uniform(8, 2), 5);
    for (int m = 1; m < 7; ++m) {
        if (m > 4) break;
        const MomentBall ball = moment_ball(useq, m);
        CHECK(ball.center.norm() < 1e-14);
        CHECK(dist(ball.left_radius.mat(), identity(2)) < 1e-14);
        CHECK(dist(ball.right_radius.mat(), identity(2)) < 1e-14);
    }
    const MomentSequence rseq = circle_moments(random_circle_measure({2, 5, false, 23}), 3);
    const MomentBall b0 = moment_ball(rseq, 0);
    CHECK(b0.center.norm() == 0.0);
    CHECK(dist(b0.left_radius.mat(), rseq.gamma(0)) < 1e-14);
    CHECK(dist(b0.right_radius.mat(), rseq.gamma(0)) < 1e-14);
}

TEST_CASE("moment_ball radii equal Schur complements of the Toeplitz inverse") {
    const MomentSequence seq = circle_moments(random_circle_measure({2, 6, false, 29}), 3);
    const int m = 2;
    const MomentBall ball = moment_ball(seq, m);
    const CMatrix inv = build_toeplitz(seq, m).base.inverse();
    const CMatrix r_inv = block_get(inv, m, m, 2).inverse();
    const CMatrix l_inv = block_get(inv, 0, 0, 2).inverse();
    CHECK(dist(ball.right_radius.mat(), r_inv) < 1e-10);
    CHECK(dist(ball.left_radius.mat(), l_inv) < 1e-10);
}

TEST_CASE("moment_ball requires interior moments") {
    const MomentSequence single = circle_moments(point_mass(2), 2);
    CHECK_THROWS_AS(moment_ball(single, 1), NotInterior);
}

TEST_CASE("canonical_moment explicit cases") {
    const MomentSequence seq = circle_moments(random_circle_measure({2, 5, false, 31}), 2);
    const HermitianMatrix g0(seq.gamma(0), 1e-8);
    const CMatrix expected = inv_sqrt(g0).mat() * seq.gamma(1) * inv_sqrt(g0).mat();
    CHECK(dist(canonical_moment(seq, 0), expected) < 1e-12);

    const MomentSequence single = circle_moments(point_mass(2), 1);
    CHECK(dist(canonical_moment(single, 0), identity(2)) < 1e-14);

    const MomentSequence useq = circle_moments(discrete_uniform(8, 2), 6);
    for (int m = 0; m < 6; ++m) CHECK(canonical_moment(useq, m).norm() < 1e-13);
}

TEST_CASE("canonical_sequence boundary detection") {
    const CanonicalSequence single = canonical_sequence(circle_moments(point_mass(2), 2));
    REQUIRE(single.coeffs.size() == 1);
    CHECK(dist(single.coeffs[0], identity(2)) < 1e-14);
    REQUIRE(single.n_mu.has_value());
    CHECK(*single.n_mu == 1);
    CHECK(single.trigger == BoundaryTrigger::ContractionBoundary);

    const int n = 6;
    const CanonicalSequence uniform = canonical_sequence(circle_moments(discrete_uniform(n, 2), n));
    REQUIRE(uniform.n_mu.has_value());
    CHECK(*uniform.n_mu == n);
    REQUIRE(static_cast<int>(uniform.coeffs.size()) == n);
    for (int k = 0; k + 1 < n; ++k) CHECK(uniform.coeffs[k].norm() < 1e-13);
    CHECK(contraction_check(uniform.coeffs.back()).sigma_max == doctest::Approx(1.0));
}

TEST_CASE("canonical_sequence boundary order equals the atom count") {
    for (std::uint64_t seed : {37u, 41u, 43u}) {
        const int k = 3 + static_cast<int>(seed % 3);
        const CircleMeasure mu = random_circle_measure({2, k, false, seed});
        const MomentSequence seq = circle_moments(mu, k + 1);
        // rank oracle: T_{k-1} is PD while T_k has a null direction
        CHECK(psd_classify(HermitianMatrix(build_toeplitz(seq, k - 1).base, 1e-8))
                  .positive_definite());
        CHECK_FALSE(psd_classify(HermitianMatrix(build_toeplitz(seq, k).base, 1e-8))
                        .positive_definite());
        const CanonicalSequence cs = canonical_sequence(seq);
        REQUIRE(cs.n_mu.has_value());
        CHECK(*cs.n_mu == k);
    }
}

TEST_CASE("canonical_sequence runs out of moments without a verdict") {
    const CircleMeasure mu = random_circle_measure({2, 6, false, 47});
    const CanonicalSequence cs = canonical_sequence(circle_moments(mu, 3));
    CHECK_FALSE(cs.n_mu.has_value());
    CHECK(cs.trigger == BoundaryTrigger::MomentsExhausted);
    CHECK(cs.coeffs.size() == 3);
}

TEST_CASE("canonical_sequence rejects singular gamma_0") {
    CMatrix w = czeros(2, 2);
    w(0, 0) = 1.0;  // rank-deficient weight
    const CircleMeasure mu(2, {{0.3, HermitianMatrix(w)}});
    CHECK_THROWS_AS(canonical_sequence(circle_moments(mu, 2)), DegenerateMeasure);
}

TEST_CASE("ball_membership identifies center, boundary and the generating moment") {
    const MomentSequence seq = circle_moments(random_circle_measure({2, 6, false, 53}), 4);
    const int m = 2;
    const MomentBall ball = moment_ball(seq, m);

    const BallMembership center = ball_membership(ball.center, ball);
    CHECK(center.inside);
    CHECK(center.u.norm() < 1e-12);

    const CMatrix w_edge = ball.center + principal_sqrt(ball.left_radius).mat() *
                                             principal_sqrt(ball.right_radius).mat();
    const BallMembership edge = ball_membership(w_edge, ball);
    CHECK(edge.inside);
    CHECK(dist(edge.u, identity(2)) < 1e-10);

    const BallMembership gen = ball_membership(seq.gamma(m + 1), ball);
    CHECK(gen.inside);
    CHECK(dist(gen.u, canonical_moment(seq, m)) < 1e-12);
}

TEST_CASE("complete_moment builds admissible extensions") {
    const MomentSequence seq = circle_moments(random_circle_measure({2, 6, false, 59}), 3);
    const int m = 2;
    const MomentBall ball = moment_ball(seq, m);

    CHECK(dist(complete_moment(ball, czeros(2, 2)), ball.center) == 0.0);
    CHECK(dist(complete_moment(ball, canonical_moment(seq, m)), seq.gamma(m + 1)) < 1e-11);

    std::vector<CMatrix> extended(seq.gammas().begin(), seq.gammas().begin() + m + 1);
    extended.push_back(complete_moment(ball, identity(2)));
    const MomentSequence longer(2, extended);
    // the extension is singular within the boundary tolerance, never outside
    Tolerances boundary_scale;
    boundary_scale.psd = boundary_scale.boundary;
    CHECK(membership(longer, m + 1, boundary_scale).cls == Membership::Boundary);
    CHECK(membership(longer, m + 1).cls != Membership::Outside);

    CHECK_THROWS_AS(complete_moment(ball, 2.0 * identity(2)), NotContraction);
}

TEST_CASE("moments_from_verblunsky explicit cases") {
    const HermitianMatrix g0(identity(2));
    const MomentSequence zero = moments_from_verblunsky(g0, {czeros(2, 2), czeros(2, 2), czeros(2, 2)});
    for (int k = 1; k <= 3; ++k) CHECK(zero.gamma(k).norm() == 0.0);

    const MomentSequence one = moments_from_verblunsky(g0, {identity(2)});
    CHECK(dist(one.gamma(1), identity(2)) < 1e-14);

    CHECK_THROWS_AS(moments_from_verblunsky(g0, {2.0 * identity(2)}), NotContraction);
    CHECK_THROWS_AS(moments_from_verblunsky(g0, {identity(2), czeros(2, 2)}), DegenerateMeasure);
    CHECK_THROWS_AS(moments_from_verblunsky(HermitianMatrix(czeros(2, 2)), {czeros(2, 2)}),
                    DegenerateMeasure);
}

TEST_CASE("canonical moments and completion are mutually inverse") {
    std::mt19937_64 rng(61);
    SUBCASE("coefficients -> moments -> coefficients") {
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<CMatrix> coeffs;
            for (int k = 0; k < 4; ++k) coeffs.push_back(random_contraction(rng, 2, 0.8));
            const MomentSequence seq = moments_from_verblunsky(HermitianMatrix(random_pd(rng, 2)),
                                                               coeffs);
            const CanonicalSequence cs = canonical_sequence(seq);
            REQUIRE(cs.coeffs.size() == coeffs.size());
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                CHECK(dist(cs.coeffs[k], coeffs[k]) < 1e-9);
            }
        }
    }
    SUBCASE("moments -> coefficients -> moments") {
        for (std::uint64_t seed : {67u, 71u, 73u}) {
            const CircleMeasure mu = random_circle_measure({2, 6, false, seed});
            const MomentSequence seq = circle_moments(mu, 4);
            const CanonicalSequence cs = canonical_sequence(seq);
            const MomentSequence back =
                moments_from_verblunsky(HermitianMatrix(seq.gamma(0), 1e-8), cs.coeffs);
            for (int k = 1; k <= 4; ++k) {
                CHECK(dist(back.gamma(k), seq.gamma(k)) < 1e-9 * std::max(1.0, seq.gamma(k).norm()));
            }
        }
    }
}

TEST_CASE("symmetric measures have coinciding radii and persymmetric inverses") {
    for (std::uint64_t seed : {79u, 83u}) {
        const CircleMeasure mu = random_circle_measure({2, 4, true, seed});
        const MomentSequence seq = circle_moments(mu, 5);
        for (int m = 0; m <= 4; ++m) {
            const MomentBall ball = moment_ball(seq, m);
            CHECK(max_abs(ball.left_radius.mat() - ball.right_radius.mat()) <=
                  1e-10 * std::max(1.0, max_abs(ball.left_radius.mat())));
        }
        const CMatrix base = build_toeplitz(seq, 4).base;
        CHECK(base.imag().cwiseAbs().maxCoeff() < 1e-12);
        CHECK(max_abs(base - base.transpose()) < 1e-12);
        // block persymmetry of the inverse, checked by explicit inversion
        const int m = 4;
        const CMatrix inv = build_toeplitz(seq, m - 1).base.inverse();
        for (int k = 0; k < m; ++k) {
            for (int l = 0; l < m; ++l) {
                CHECK(max_abs(block_get(inv, k, l, 2) - block_get(inv, m - 1 - k, m - 1 - l, 2)) <
                      1e-9 * std::max(1.0, max_abs(inv)));
            }
        }
    }
}
