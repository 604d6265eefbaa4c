#pragma once

// Canonical moments of matrix measures on [-1,1]: block Hankel matrices, the
// extremal moments bounding the next admissible moment, canonical moments in
// symmetric and nonsymmetric normalization, the relations carrying circle
// canonical moments to three-term recurrence coefficients, and an independent
// Gram-Schmidt route used to cross-check them.

#include <optional>
#include <vector>

#include "mopuc/moment_space.hpp"
#include "mopuc/polynomial.hpp"

namespace mopuc {

/// The four block Hankel objects of order n; shapes depend on the parity of n.
/// Empty matrices are represented with zero rows.
struct HankelSet {
    int order = 0;
    CMatrix h_lower;  // plain (even) or summed (odd) moments
    CMatrix h_upper;  // differenced moments
    CMatrix v_lower;  // stacked block column paired with h_lower
    CMatrix v_upper;  // stacked block column paired with h_upper
};

HankelSet hankel_build(const IntervalMomentSequence& s, int n);

/// Extremal values bounding the moment of order n given S_0..S_{n-1}.
struct SBounds {
    int order = 0;
    CMatrix upper;  // S_n^+
    CMatrix lower;  // S_n^-
};

SBounds s_bounds(const IntervalMomentSequence& s, int n, const Tolerances& tol = {});

struct IntervalCanonical {
    std::vector<CMatrix> u;      // U_1..U_K (symmetric normalization)
    std::vector<CMatrix> u_bar;  // nonsymmetric normalization
    std::optional<int> n_mu;     // boundary order, empty when not reached
    double u_asymmetry = 0.0;    // worst observed asymmetry of any U_n
};

/// Canonical moments while the bounding interval stays positive definite.
IntervalCanonical canonical_U(const IntervalMomentSequence& s, const Tolerances& tol = {});

/// Conjugate circle canonical moments into their monic normalization using the
/// left radii of the moment balls (symmetric-measure data, so left = right).
std::vector<CMatrix> abar_from_A(const CanonicalSequence& a, const std::vector<MomentBall>& balls,
                                 const Tolerances& tol = {});

/// Interval canonical moments predicted from circle ones: U_n = (A_n + I)/2.
std::vector<CMatrix> geronimus_forward(const CanonicalSequence& a);

/// Three-term recurrence data: b[m] = B_m and c[m] = C_{m+1}.
struct Recurrence {
    std::vector<CMatrix> b;
    std::vector<CMatrix> c;
};

/// Recurrence coefficients B_0..B_{K-2}, C_1..C_{K-1} from the monic-normalized
/// circle coefficients, with the order-zero coefficient fixed to -I.
Recurrence recurrence_from_abar(const std::vector<CMatrix>& abar, int order);

struct DirectRecurrence {
    std::vector<MatrixPolynomial> polys;  // monic right-orthogonal P_0..P_K
    Recurrence rec;
    double extraction_residual = 0.0;
};

/// Independent construction: monic orthogonal polynomials for the interval
/// moments by block Hankel solves, recurrence coefficients by coefficient
/// matching in the (1+t) recursion.
DirectRecurrence recurrence_direct(const IntervalMomentSequence& s, int order,
                                   const Tolerances& tol = {});

struct GeronimusReport {
    struct PerIndex {
        int index = 0;
        double b = 0.0;
        double c = 0.0;
    };
    double b_discrepancy = 0.0;
    double c_discrepancy = 0.0;
    std::vector<PerIndex> per_index;
    int n_checked = 0;
    Recurrence via_circle;
    Recurrence via_interval;
};

/// End-to-end cross check: circle moments -> canonical moments -> recurrence
/// formulas versus cos-pushforward -> interval moments -> direct Gram-Schmidt.
/// Compares B_0..B_{order-2} and C_1..C_{order-1}.
GeronimusReport geronimus_check(const CircleMeasure& mu, int order, const Tolerances& tol = {});

}  // namespace mopuc
