#pragma once

// Moment-space geometry on the circle side: block Toeplitz assembly, membership
// classification, moment balls, canonical moments, the inverse map from
// contraction coefficients back to moments, and boundary-order detection.

#include <optional>
#include <vector>

#include "mopuc/measures.hpp"

namespace mopuc {

struct BlockToeplitz {
    Index p = 0;
    int order = 0;      // m
    CMatrix base;       // p(m+1) x p(m+1), block (i,j) = gamma_{j-i}
};

/// Hermitian block Toeplitz matrix of the moments gamma_0..gamma_m.
BlockToeplitz build_toeplitz(const MomentSequence& seq, int m);

enum class Membership { Interior, Boundary, Outside };

struct MembershipVerdict {
    Membership cls = Membership::Outside;
    double min_eigenvalue = 0.0;
    int order = 0;
};

/// Moment-space membership at order m: Interior iff T_m is PD, Boundary iff
/// PSD singular, Outside iff indefinite.
MembershipVerdict membership(const MomentSequence& seq, int m, const Tolerances& tol = {});

/// The real scalar sum_{i,j} trace(B_i B_j^* gamma_{i-j}); nonnegative exactly
/// on moment points. Throws ImaginaryResidue if the imaginary part survives.
double quadratic_form(const MomentSequence& seq, const std::vector<CMatrix>& b,
                      const Tolerances& tol = {});

/// Admissible region for the next moment: center and the two PD radii.
struct MomentBall {
    int order = 0;  // m: the ball constrains gamma_{m+1}
    CMatrix center;
    HermitianMatrix left_radius;
    HermitianMatrix right_radius;
};

/// Ball of admissible moments of order m+1. Requires Interior membership at
/// order m; the order-0 ball is (0, gamma_0, gamma_0).
MomentBall moment_ball(const MomentSequence& seq, int m, const Tolerances& tol = {});

/// Convenience: balls of orders 0..count-1.
std::vector<MomentBall> moment_balls(const MomentSequence& seq, int count,
                                     const Tolerances& tol = {});

/// Canonical moment A_{m+1}: the position of gamma_{m+1} inside its ball,
/// normalized by the inverse square roots of the radii.
CMatrix canonical_moment(const MomentSequence& seq, int m, const Tolerances& tol = {});

enum class BoundaryTrigger { MomentsExhausted, ToeplitzBoundary, ContractionBoundary };

struct CanonicalSequence {
    Index p = 0;
    std::vector<CMatrix> coeffs;     // A_1..A_K
    std::optional<int> n_mu;         // boundary order, empty when not reached
    BoundaryTrigger trigger = BoundaryTrigger::MomentsExhausted;
};

/// All computable canonical moments; stops at the moment-space boundary or when
/// the supplied moments run out, and records which trigger fired.
CanonicalSequence canonical_sequence(const MomentSequence& seq, const Tolerances& tol = {});

struct BallMembership {
    bool inside = false;
    CMatrix u;
    double sigma_max = 0.0;
};

/// Position of a candidate moment W inside the ball; inside iff the normalized
/// position is a contraction.
BallMembership ball_membership(const CMatrix& w, const MomentBall& ball,
                               const Tolerances& tol = {});

/// Moment completion: W = center + L^{1/2} U R^{1/2} for a contraction U.
CMatrix complete_moment(const MomentBall& ball, const CMatrix& u, const Tolerances& tol = {});

/// Rebuild gamma_1..gamma_K from gamma_0 and contraction coefficients by
/// iterating the completion step. All coefficients except possibly the last
/// must be strict contractions.
MomentSequence moments_from_verblunsky(const HermitianMatrix& gamma0,
                                       const std::vector<CMatrix>& coeffs,
                                       const Tolerances& tol = {});

}  // namespace mopuc
