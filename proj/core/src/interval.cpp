#include "mopuc/interval.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace mopuc {

namespace {

/// Assemble a square block matrix with block (i,j) given by a generator.
CMatrix block_matrix(Index p, int blocks, const std::function<CMatrix(int, int)>& gen) {
    CMatrix out = czeros(p * blocks, p * blocks);
    for (int i = 0; i < blocks; ++i) {
        for (int j = 0; j < blocks; ++j) out.block(i * p, j * p, p, p) = gen(i, j);
    }
    return out;
}

CMatrix block_column(Index p, int blocks, const std::function<CMatrix(int)>& gen) {
    CMatrix out = czeros(p * blocks, p);
    for (int i = 0; i < blocks; ++i) out.block(i * p, 0, p, p) = gen(i);
    return out;
}

/// v^T H^{-1} v with H checked positive definite first.
CMatrix pd_contraction(const CMatrix& h, const CMatrix& v, const char* what,
                       const Tolerances& tol) {
    if (!psd_classify(HermitianMatrix(h, 1e-8), tol).positive_definite()) {
        throw NotInterior(std::string(what) + ": Hankel matrix is not positive definite");
    }
    const CMatrix x = solve(h, v, tol);
    return v.transpose() * x;
}

CMatrix symmetrized(const CMatrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

HankelSet hankel_build(const IntervalMomentSequence& s, int n) {
    if (n < 0) throw InvalidInput("hankel_build: order must be nonnegative");
    if (n > s.max_order()) throw InsufficientData("hankel_build: not enough moments");
    const Index p = s.dim();
    HankelSet out;
    out.order = n;
    if (n % 2 == 0) {
        const int m = n / 2;
        out.h_lower = block_matrix(p, m + 1, [&](int i, int j) { return s.s(i + j); });
        out.h_upper =
            block_matrix(p, m, [&](int i, int j) { return s.s(i + j) - s.s(i + j + 2); });
        out.v_lower = block_column(p, m, [&](int i) { return s.s(m + i); });
        out.v_upper = block_column(
            p, std::max(m - 1, 0), [&](int i) { return s.s(m - 1 + i) - s.s(m + 1 + i); });
    } else {
        const int m = (n - 1) / 2;
        out.h_lower =
            block_matrix(p, m + 1, [&](int i, int j) { return s.s(i + j) + s.s(i + j + 1); });
        out.h_upper =
            block_matrix(p, m + 1, [&](int i, int j) { return s.s(i + j) - s.s(i + j + 1); });
        out.v_lower = block_column(p, m, [&](int i) { return s.s(m + i) + s.s(m + 1 + i); });
        out.v_upper = block_column(p, m, [&](int i) { return s.s(m + i) - s.s(m + 1 + i); });
    }
    return out;
}

SBounds s_bounds(const IntervalMomentSequence& s, int n, const Tolerances& tol) {
    if (n < 1) throw InvalidInput("s_bounds: order must be at least 1");
    if (n - 1 > s.max_order()) throw InsufficientData("s_bounds: needs S_0..S_{n-1}");
    SBounds out;
    out.order = n;
    if (n == 1) {
        out.upper = s.s(0);
        out.lower = -s.s(0);
        return out;
    }
    if (n == 2) {
        out.upper = s.s(0);
        out.lower = pd_contraction(s.s(0), s.s(1), "s_bounds", tol);
        return out;
    }
    const HankelSet at_n = hankel_build(s, n);        // for the h-vectors
    const HankelSet at_n2 = hankel_build(s, n - 2);   // for the Hankel matrices
    if (n % 2 == 0) {
        out.upper = s.s(n - 2) - pd_contraction(at_n2.h_upper, at_n.v_upper, "s_bounds", tol);
        out.lower = pd_contraction(at_n2.h_lower, at_n.v_lower, "s_bounds", tol);
    } else {
        out.upper = s.s(n - 1) - pd_contraction(at_n2.h_upper, at_n.v_upper, "s_bounds", tol);
        out.lower = pd_contraction(at_n2.h_lower, at_n.v_lower, "s_bounds", tol) - s.s(n - 1);
    }
    return out;
}

IntervalCanonical canonical_U(const IntervalMomentSequence& s, const Tolerances& tol) {
    if (!psd_classify(HermitianMatrix(s.s(0), tol.hermitian), tol).positive_definite()) {
        throw DegenerateMeasure("canonical_U: S_0 is singular");
    }
    IntervalCanonical out;
    for (int n = 1; n <= s.max_order(); ++n) {
        SBounds sb;
        try {
            sb = s_bounds(s, n, tol);
        } catch (const NotInterior&) {
            out.n_mu = n - 1;
            return out;
        }
        const HermitianMatrix diameter(symmetrized(sb.upper - sb.lower), 1e-8);
        if (!psd_classify(diameter, tol).positive_definite()) {
            out.n_mu = n - 1;
            return out;
        }
        const CMatrix dis = inv_sqrt(diameter, tol).mat();
        const CMatrix centered = s.s(n) - sb.lower;
        const CMatrix u = dis * centered * dis;
        const double scale = std::max(1.0, max_abs(u));
        out.u_asymmetry = std::max(out.u_asymmetry, max_abs(u - u.transpose()) / scale);
        out.u.push_back(u);
        out.u_bar.push_back(solve(symmetrized(sb.upper - sb.lower), centered, tol));
        Eigen::SelfAdjointEigenSolver<CMatrix> es(symmetrized(u), Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() <= tol.boundary ||
            es.eigenvalues().maxCoeff() >= 1.0 - tol.boundary) {
            out.n_mu = n;
            return out;
        }
    }
    return out;
}

std::vector<CMatrix> abar_from_A(const CanonicalSequence& a, const std::vector<MomentBall>& balls,
                                 const Tolerances& tol) {
    if (balls.size() < a.coeffs.size()) {
        throw DimensionMismatch("abar_from_A: need one ball per coefficient");
    }
    std::vector<CMatrix> abar;
    abar.reserve(a.coeffs.size());
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        const MomentBall& ball = balls[k];
        if (ball.order != static_cast<int>(k)) {
            throw DimensionMismatch("abar_from_A: ball order mismatch");
        }
        const CMatrix& l = ball.left_radius.mat();
        const double lr = max_abs(l - ball.right_radius.mat());
        if (lr > 1e-8 * std::max(1.0, max_abs(l))) {
            throw NotSymmetric("abar_from_A: left and right radii differ");
        }
        abar.push_back(inv_sqrt(ball.left_radius, tol).mat() * a.coeffs[k] *
                       principal_sqrt(ball.left_radius, tol).mat());
    }
    return abar;
}

std::vector<CMatrix> geronimus_forward(const CanonicalSequence& a) {
    std::vector<CMatrix> u;
    u.reserve(a.coeffs.size());
    for (const CMatrix& coeff : a.coeffs) {
        u.push_back(0.5 * (coeff + identity(a.p)));
    }
    return u;
}

namespace {

/// Coefficient access with the order-zero convention baked in.
CMatrix abar_at(const std::vector<CMatrix>& abar, int idx, Index p) {
    if (idx == 0) return -identity(p);
    return abar[static_cast<std::size_t>(idx - 1)];
}

}  // namespace

Recurrence recurrence_from_abar(const std::vector<CMatrix>& abar, int order) {
    if (order < 2) throw InvalidInput("recurrence_from_abar: order must be at least 2");
    if (static_cast<int>(abar.size()) < 2 * order - 1) {
        throw InsufficientData("recurrence_from_abar: needs coefficients up to index " +
                               std::to_string(2 * order - 1));
    }
    const Index p = abar.front().rows();
    const CMatrix id = identity(p);
    Recurrence rec;
    for (int m = 0; m + 2 <= order; ++m) {
        const CMatrix a2m = abar_at(abar, 2 * m, p);
        const CMatrix a2m1 = abar_at(abar, 2 * m + 1, p);
        const CMatrix a2m2 = abar_at(abar, 2 * m + 2, p);
        const CMatrix a2m3 = abar_at(abar, 2 * m + 3, p);
        rec.b.push_back(0.25 * (id - a2m) * (id - a2m1 * a2m1) * (id + a2m2));
        rec.c.push_back(0.5 * (id - a2m1) * (id + a2m2) + 0.5 * (id - a2m2) * (id + a2m3));
    }
    return rec;
}

namespace {

/// Monic right-orthogonal polynomial of degree m for the interval moments.
MatrixPolynomial monic_interval(const IntervalMomentSequence& s, int m, const Tolerances& tol) {
    const Index p = s.dim();
    std::vector<CMatrix> coeffs(static_cast<std::size_t>(m) + 1, czeros(p, p));
    coeffs.back() = identity(p);
    if (m > 0) {
        const CMatrix h = block_matrix(p, m, [&](int i, int l) { return s.s(i + l); });
        if (!psd_classify(HermitianMatrix(h, 1e-8), tol).positive_definite()) {
            throw NotInterior("recurrence_direct: Hankel matrix singular at degree " +
                              std::to_string(m));
        }
        CMatrix rhs = czeros(m * p, p);
        for (int i = 0; i < m; ++i) rhs.block(i * p, 0, p, p) = -s.s(i + m);
        const CMatrix x = solve(h, rhs, tol);
        for (int l = 0; l < m; ++l) coeffs[static_cast<std::size_t>(l)] = x.block(l * p, 0, p, p);
    }
    return MatrixPolynomial(p, std::move(coeffs));
}

}  // namespace

DirectRecurrence recurrence_direct(const IntervalMomentSequence& s, int order,
                                   const Tolerances& tol) {
    if (order < 2) throw InvalidInput("recurrence_direct: order must be at least 2");
    if (2 * order - 1 > s.max_order()) {
        throw InsufficientData("recurrence_direct: not enough interval moments");
    }
    const Index p = s.dim();
    DirectRecurrence out;
    for (int m = 0; m <= order; ++m) out.polys.push_back(monic_interval(s, m, tol));
    const CMatrix id = identity(p);
    for (int m = 0; m + 2 <= order; ++m) {
        const MatrixPolynomial& pm = out.polys[static_cast<std::size_t>(m)];
        const MatrixPolynomial& pm1 = out.polys[static_cast<std::size_t>(m + 1)];
        const MatrixPolynomial& pm2 = out.polys[static_cast<std::size_t>(m + 2)];
        // match coefficients in (1+t) P_{m+1} = P_{m+2} + P_{m+1} C + P_m B
        const CMatrix c = pm1.coeff_or_zero(m) + id - pm2.coeff_or_zero(m + 1);
        const CMatrix b = pm1.coeff_or_zero(m - 1) + pm1.coeff_or_zero(m) -
                          pm2.coeff_or_zero(m) - pm1.coeff_or_zero(m) * c;
        for (int k = 0; k < m; ++k) {
            const CMatrix lhs =
                pm1.coeff_or_zero(k - 1) + pm1.coeff_or_zero(k) - pm2.coeff_or_zero(k);
            const CMatrix rhs = pm1.coeff_or_zero(k) * c + pm.coeff_or_zero(k) * b;
            out.extraction_residual = std::max(out.extraction_residual, frob(lhs - rhs));
        }
        out.rec.c.push_back(c);
        out.rec.b.push_back(b);
    }
    return out;
}

GeronimusReport geronimus_check(const CircleMeasure& mu, int order, const Tolerances& tol) {
    if (order < 2) throw InvalidInput("geronimus_check: order must be at least 2");
    if (!is_symmetric(mu, tol.hermitian)) {
        throw NotSymmetric("geronimus_check: measure is not symmetric");
    }
    const int circle_order = 2 * order - 1;
    const MomentSequence seq = circle_moments(mu, circle_order, tol);
    const CanonicalSequence cs = canonical_sequence(seq, tol);
    if (static_cast<int>(cs.coeffs.size()) < circle_order) {
        throw NotInterior("geronimus_check: measure leaves the interior before order " +
                          std::to_string(circle_order));
    }
    const std::vector<MomentBall> balls = moment_balls(seq, circle_order, tol);
    const std::vector<CMatrix> abar = abar_from_A(cs, balls, tol);

    GeronimusReport report;
    report.via_circle = recurrence_from_abar(abar, order);
    const IntervalMomentSequence s = interval_moments(szego_map(mu, tol), 2 * order, tol);
    report.via_interval = recurrence_direct(s, order, tol).rec;
    report.n_checked = order - 1;
    for (int m = 0; m + 2 <= order; ++m) {
        GeronimusReport::PerIndex pi;
        pi.index = m;
        pi.b = frob(report.via_circle.b[static_cast<std::size_t>(m)] -
                    report.via_interval.b[static_cast<std::size_t>(m)]);
        pi.c = frob(report.via_circle.c[static_cast<std::size_t>(m)] -
                    report.via_interval.c[static_cast<std::size_t>(m)]);
        report.b_discrepancy = std::max(report.b_discrepancy, pi.b);
        report.c_discrepancy = std::max(report.c_discrepancy, pi.c);
        report.per_index.push_back(pi);
    }
    return report;
}

}  // namespace mopuc
