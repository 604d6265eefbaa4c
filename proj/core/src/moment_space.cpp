#include "mopuc/moment_space.hpp"

#include <cmath>

namespace mopuc {

namespace {

/// Raw ball data before any positive-definiteness decision.
struct RawBall {
    CMatrix center;
    CMatrix left;
    CMatrix right;
};

/// Schur-complement data of the order-m ball computed by solving against
/// T_{m-1} (never by forming its inverse). Assumes T_{m-1} PD.
RawBall raw_ball(const MomentSequence& seq, int m) {
    const Index p = seq.dim();
    if (m == 0) {
        return {czeros(p, p), seq.gamma(0), seq.gamma(0)};
    }
    const CMatrix tm1 = build_toeplitz(seq, m - 1).base;
    CMatrix fwd(p, m * p);   // (gamma_1 ... gamma_m)
    CMatrix bwd(p, m * p);   // (gamma_{-m} ... gamma_{-1})
    for (int k = 0; k < m; ++k) {
        fwd.block(0, k * p, p, p) = seq.gamma(k + 1);
        bwd.block(0, k * p, p, p) = seq.gamma(k - m);
    }
    Eigen::LDLT<CMatrix> ldlt(tm1);
    if (ldlt.info() != Eigen::Success) {
        throw NotInterior("moment ball: T_{m-1} factorization failed");
    }
    const CMatrix xf = ldlt.solve(fwd.adjoint());
    const CMatrix xb = ldlt.solve(bwd.adjoint());
    RawBall ball;
    ball.center = fwd * xb;
    ball.left = seq.gamma(0) - fwd * xf;
    ball.right = seq.gamma(0) - bwd * xb;
    return ball;
}

HermitianMatrix as_hermitian(const CMatrix& m) { return HermitianMatrix(m, 1e-6); }

double spectral_norm(const CMatrix& m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace

BlockToeplitz build_toeplitz(const MomentSequence& seq, int m) {
    if (m < 0) throw InvalidInput("build_toeplitz: order must be nonnegative");
    if (m > seq.max_order()) throw InsufficientData("build_toeplitz: not enough moments");
    const Index p = seq.dim();
    BlockToeplitz t;
    t.p = p;
    t.order = m;
    t.base = CMatrix(p * (m + 1), p * (m + 1));
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            t.base.block(i * p, j * p, p, p) = seq.gamma(j - i);
        }
    }
    return t;
}

MembershipVerdict membership(const MomentSequence& seq, int m, const Tolerances& tol) {
    const BlockToeplitz t = build_toeplitz(seq, m);
    const PsdVerdict v = psd_classify(HermitianMatrix(t.base, tol.hermitian), tol);
    MembershipVerdict out;
    out.min_eigenvalue = v.min_eigenvalue;
    out.order = m;
    switch (v.cls) {
        case PsdClass::PositiveDefinite: out.cls = Membership::Interior; break;
        case PsdClass::PositiveSemidefiniteSingular: out.cls = Membership::Boundary; break;
        case PsdClass::Indefinite: out.cls = Membership::Outside; break;
    }
    return out;
}

double quadratic_form(const MomentSequence& seq, const std::vector<CMatrix>& b,
                      const Tolerances& tol) {
    if (b.empty()) throw InvalidInput("quadratic_form: empty coefficient list");
    const int m = static_cast<int>(b.size()) - 1;
    if (m > seq.max_order()) throw InsufficientData("quadratic_form: not enough moments");
    const Index p = seq.dim();
    Complex acc = 0.0;
    double scale = 0.0;
    for (int i = 0; i <= m; ++i) {
        if (b[static_cast<std::size_t>(i)].rows() != p ||
            b[static_cast<std::size_t>(i)].cols() != p) {
            throw DimensionMismatch("quadratic_form: coefficient shape mismatch");
        }
        for (int j = 0; j <= m; ++j) {
            const Complex term = (b[static_cast<std::size_t>(i)] *
                                  b[static_cast<std::size_t>(j)].adjoint() * seq.gamma(i - j))
                                     .trace();
            acc += term;
            scale += std::abs(term);
        }
    }
    if (std::abs(acc.imag()) > 1e-10 * std::max(1.0, scale)) {
        throw ImaginaryResidue("quadratic_form: imaginary residue too large");
    }
    return acc.real();
}

MomentBall moment_ball(const MomentSequence& seq, int m, const Tolerances& tol) {
    if (m < 0) throw InvalidInput("moment_ball: order must be nonnegative");
    const MembershipVerdict v = membership(seq, m, tol);
    if (v.cls != Membership::Interior) {
        throw NotInterior("moment_ball: moments are not interior at order " + std::to_string(m));
    }
    const RawBall raw = raw_ball(seq, m);
    MomentBall ball;
    ball.order = m;
    ball.center = raw.center;
    ball.left_radius = as_hermitian(raw.left);
    ball.right_radius = as_hermitian(raw.right);
    return ball;
}

std::vector<MomentBall> moment_balls(const MomentSequence& seq, int count, const Tolerances& tol) {
    std::vector<MomentBall> balls;
    balls.reserve(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) balls.push_back(moment_ball(seq, m, tol));
    return balls;
}

CMatrix canonical_moment(const MomentSequence& seq, int m, const Tolerances& tol) {
    if (m + 1 > seq.max_order()) {
        throw InsufficientData("canonical_moment: gamma_{m+1} not available");
    }
    const MomentBall ball = moment_ball(seq, m, tol);
    const CMatrix li = inv_sqrt(ball.left_radius, tol).mat();
    const CMatrix ri = inv_sqrt(ball.right_radius, tol).mat();
    return li * (seq.gamma(m + 1) - ball.center) * ri;
}

CanonicalSequence canonical_sequence(const MomentSequence& seq, const Tolerances& tol) {
    CanonicalSequence out;
    out.p = seq.dim();
    const PsdVerdict g0 = psd_classify(HermitianMatrix(seq.gamma(0), tol.hermitian), tol);
    if (!g0.positive_definite()) {
        throw DegenerateMeasure("canonical_sequence: gamma_0 is singular");
    }
    for (int m = 0;; ++m) {
        if (m > seq.max_order()) {
            out.trigger = BoundaryTrigger::MomentsExhausted;
            return out;
        }
        const MembershipVerdict v = membership(seq, m, tol);
        if (v.cls != Membership::Interior) {
            out.n_mu = m;
            out.trigger = BoundaryTrigger::ToeplitzBoundary;
            return out;
        }
        if (m + 1 > seq.max_order()) {
            out.trigger = BoundaryTrigger::MomentsExhausted;
            return out;
        }
        const RawBall raw = raw_ball(seq, m);
        const CMatrix li = inv_sqrt(as_hermitian(raw.left), tol).mat();
        const CMatrix ri = inv_sqrt(as_hermitian(raw.right), tol).mat();
        out.coeffs.push_back(li * (seq.gamma(m + 1) - raw.center) * ri);
        if (spectral_norm(out.coeffs.back()) >= 1.0 - tol.boundary) {
            out.n_mu = m + 1;
            out.trigger = BoundaryTrigger::ContractionBoundary;
            return out;
        }
    }
}

BallMembership ball_membership(const CMatrix& w, const MomentBall& ball, const Tolerances& tol) {
    if (w.rows() != ball.center.rows() || w.cols() != ball.center.cols()) {
        throw DimensionMismatch("ball_membership: candidate shape mismatch");
    }
    const CMatrix li = inv_sqrt(ball.left_radius, tol).mat();
    const CMatrix ri = inv_sqrt(ball.right_radius, tol).mat();
    BallMembership out;
    out.u = li * (w - ball.center) * ri;
    const ContractionVerdict c = contraction_check(out.u, tol);
    out.inside = c.is_contraction;
    out.sigma_max = c.sigma_max;
    return out;
}

CMatrix complete_moment(const MomentBall& ball, const CMatrix& u, const Tolerances& tol) {
    const ContractionVerdict c = contraction_check(u, tol);
    if (!c.is_contraction) {
        throw NotContraction("complete_moment: sigma_max = " + std::to_string(c.sigma_max));
    }
    const CMatrix ls = principal_sqrt(ball.left_radius, tol).mat();
    const CMatrix rs = principal_sqrt(ball.right_radius, tol).mat();
    return ball.center + ls * u * rs;
}

MomentSequence moments_from_verblunsky(const HermitianMatrix& gamma0,
                                       const std::vector<CMatrix>& coeffs,
                                       const Tolerances& tol) {
    if (!psd_classify(gamma0, tol).positive_definite()) {
        throw DegenerateMeasure("moments_from_verblunsky: gamma_0 must be PD");
    }
    const Index p = gamma0.dim();
    std::vector<CMatrix> gammas{gamma0.mat()};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const CMatrix& a = coeffs[k];
        const ContractionVerdict c = contraction_check(a, tol);
        if (!c.is_contraction) {
            throw NotContraction("moments_from_verblunsky: coefficient " + std::to_string(k + 1) +
                                 " has sigma_max = " + std::to_string(c.sigma_max));
        }
        const MomentSequence seq(p, gammas, tol);
        const RawBall raw = raw_ball(seq, static_cast<int>(k));
        // PD radii mean every earlier coefficient was strict; only the final
        // coefficient may touch the contraction boundary
        if (!psd_classify(as_hermitian(raw.left), tol).positive_definite() ||
            !psd_classify(as_hermitian(raw.right), tol).positive_definite()) {
            throw DegenerateMeasure(
                "moments_from_verblunsky: boundary reached before the final coefficient");
        }
        const CMatrix ls = principal_sqrt(as_hermitian(raw.left), tol).mat();
        const CMatrix rs = principal_sqrt(as_hermitian(raw.right), tol).mat();
        gammas.push_back(raw.center + ls * a * rs);
    }
    return MomentSequence(p, std::move(gammas), tol);
}

}  // namespace mopuc
