#pragma once

// Matrix orthogonal polynomials on the unit circle: the two inner products,
// determinantal and linear-solve constructions of the monic and orthonormal
// systems, reflection coefficient extraction and recursion residuals.

#include <vector>

#include "mopuc/moment_space.hpp"
#include "mopuc/polynomial.hpp"

namespace mopuc {

/// <P,Q>_R = sum_j P(z_j)^* w_j Q(z_j) over the atoms of mu.
CMatrix inner_right(const MatrixPolynomial& a, const MatrixPolynomial& b, const CircleMeasure& mu);

/// <P,Q>_L = sum_j P(z_j) w_j Q(z_j)^*.
CMatrix inner_left(const MatrixPolynomial& a, const MatrixPolynomial& b, const CircleMeasure& mu);

/// Coefficient-level inner products against z^k computed from moments:
/// <z^k I, Q>_R = sum_l gamma_{l-k} Q_l and <P, z^k I>_L = sum_l P_l gamma_{l-k}.
CMatrix inner_monomial_right(const MomentSequence& seq, int k, const MatrixPolynomial& q);
CMatrix inner_monomial_left(const MomentSequence& seq, const MatrixPolynomial& p, int k);

enum class Side { Right, Left };

/// Determinantal orthogonal polynomial of degree m: every entry is the
/// determinant of the block Toeplitz matrix with one row (right) or column
/// (left) replaced by monomials. Guarded to m <= 3, p <= 3; this construction
/// is a cross-check oracle, not the production route.
MatrixPolynomial psi_determinantal(const MomentSequence& seq, int m, Side side);

struct OrthogonalityResiduals {
    double low_right = 0.0;  // max_k |<z^k, Psi_m^R>_R| for k < m
    double top_right = 0.0;  // |<z^m, Psi_m^R>_R - det(T_m) I|
    double low_left = 0.0;
    double top_left = 0.0;
};

/// Residuals of the determinantal orthogonality identities (size-guarded).
OrthogonalityResiduals theorem31_check(const MomentSequence& seq, int m,
                                       const Tolerances& tol = {});

/// Monic and orthonormal systems of both sides through degree K, built by
/// solving the orthogonality conditions against the block Toeplitz matrix.
struct OrthoSystem {
    int order = 0;  // K
    std::vector<MatrixPolynomial> monic_right, monic_left;
    std::vector<MatrixPolynomial> orthonormal_right, orthonormal_left;
    std::vector<HermitianMatrix> kappa_right, kappa_left;  // leading coefficients, 0..K
    std::vector<CMatrix> rho_right, rho_left;              // 0..K-1
};

OrthoSystem monic_system(const MomentSequence& seq, int max_order, const Tolerances& tol = {});

/// Reflection coefficient of order m+1, extracted from the monic right
/// polynomial; coincides with the canonical moment of the same order.
CMatrix verblunsky_extract(const MomentSequence& seq, int m, const Tolerances& tol = {});

struct VerblunskySequence {
    std::vector<CMatrix> coeffs;  // H_1..H_K
};

VerblunskySequence verblunsky_sequence(const MomentSequence& seq, int count,
                                       const Tolerances& tol = {});

struct RecursionResiduals {
    double left = 0.0;
    double right = 0.0;
};

/// Sup-norm residuals of the orthonormal recursion step m -> m+1, evaluated at
/// the atoms of mu plus 64 equispaced probe points on the circle.
RecursionResiduals szego_residuals(const OrthoSystem& sys, const VerblunskySequence& h,
                                   const CircleMeasure& mu, int m);

/// Residuals of the monic recursion for symmetric measures, with reflection
/// coefficients conjugated into their monic normalization.
RecursionResiduals monic_szego_residuals(const OrthoSystem& sys,
                                         const std::vector<CMatrix>& abar, int m);

}  // namespace mopuc
