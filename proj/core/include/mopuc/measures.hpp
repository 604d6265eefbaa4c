#pragma once

// Finite-atomic matrix measures on the unit circle and on [-1,1], exact moment
// computation, symmetrization, the cos-pushforward between circle and interval
// and the Chebyshev change of moment basis.
//
// Atom weights are real symmetric PSD matrices (the measures here are matrices
// of real-valued Borel measures); moments of circle measures are nevertheless
// genuinely complex.

#include <optional>
#include <vector>

#include "mopuc/matcore.hpp"

namespace mopuc {

struct CircleAtom {
    double theta = 0.0;  // in [-pi, pi)
    HermitianMatrix weight;
};

struct IntervalAtom {
    double x = 0.0;  // in [-1, 1]
    HermitianMatrix weight;
};

/// Atomic matrix measure on the unit circle. Construction normalizes angles to
/// [-pi, pi), merges atoms closer than 1e-12 and validates that every weight is
/// real symmetric PSD with at least one nonzero weight.
class CircleMeasure {
public:
    CircleMeasure(Index p, std::vector<CircleAtom> atoms, const Tolerances& tol = {});

    Index dim() const { return p_; }
    const std::vector<CircleAtom>& atoms() const { return atoms_; }

private:
    Index p_ = 0;
    std::vector<CircleAtom> atoms_;
};

/// Atomic matrix measure on [-1, 1]; same weight conventions as CircleMeasure.
class IntervalMeasure {
public:
    IntervalMeasure(Index p, std::vector<IntervalAtom> atoms, const Tolerances& tol = {});

    Index dim() const { return p_; }
    const std::vector<IntervalAtom>& atoms() const { return atoms_; }

private:
    Index p_ = 0;
    std::vector<IntervalAtom> atoms_;
};

/// Circle moments: holds the blocks for orders 0..m and serves negative orders
/// through the adjoint identity.
class MomentSequence {
public:
    MomentSequence(Index p, std::vector<CMatrix> gammas, const Tolerances& tol = {});

    Index dim() const { return p_; }
    int max_order() const { return static_cast<int>(gammas_.size()) - 1; }
    const std::vector<CMatrix>& gammas() const { return gammas_; }
    /// Moment of any order in [-max_order, max_order]; negative orders return
    /// the adjoint of the stored block.
    CMatrix gamma(int k) const;

private:
    Index p_ = 0;
    std::vector<CMatrix> gammas_;
};

/// Interval power moments S_0..S_n; entries are enforced real symmetric.
class IntervalMomentSequence {
public:
    IntervalMomentSequence(Index p, std::vector<CMatrix> moments, const Tolerances& tol = {});

    Index dim() const { return p_; }
    int max_order() const { return static_cast<int>(s_.size()) - 1; }
    const std::vector<CMatrix>& moments() const { return s_; }
    const CMatrix& s(int k) const;

private:
    Index p_ = 0;
    std::vector<CMatrix> s_;
};

/// Exact finite-sum moments of a circle measure up to order m.
MomentSequence circle_moments(const CircleMeasure& mu, int m, const Tolerances& tol = {});

struct TrigMoments {
    std::vector<RMatrix> alpha;  // orders 0..m
    std::vector<RMatrix> beta;   // orders 1..m, beta[k-1] holds order k
};

/// Entrywise split gamma_k = alpha_k + i beta_k into real cosine/sine moments.
/// Requires gamma_0 real (throws ImaginaryResidue otherwise).
TrigMoments trig_moments(const MomentSequence& seq, const Tolerances& tol = {});

/// Exact finite-sum moments of an interval measure up to order n.
IntervalMomentSequence interval_moments(const IntervalMeasure& mu, int n,
                                        const Tolerances& tol = {});

/// True iff the atom multiset is invariant under theta -> -theta; theta = 0 and
/// theta = -pi are self-paired. Weights compared entrywise within tol.
bool is_symmetric(const CircleMeasure& mu, double tol = 1e-10);

/// The measure (mu(theta) + mu(-theta)) / 2 as an atomic measure.
CircleMeasure symmetrize(const CircleMeasure& mu, const Tolerances& tol = {});

/// Pushforward under theta -> cos(theta); requires a symmetric input.
IntervalMeasure szego_map(const CircleMeasure& mu, const Tolerances& tol = {});

/// Splits interior atoms to +-arccos(x) with half weight; x = 1 maps to
/// theta = 0 and x = -1 to theta = -pi with full weight.
CircleMeasure inverse_szego_map(const IntervalMeasure& mu, const Tolerances& tol = {});

/// Circle moment of order j from interval moments via the Chebyshev expansion
/// of cos(j theta); j = 0 returns S_0.
CMatrix gamma_from_chebyshev(const IntervalMomentSequence& s, int j);

}  // namespace mopuc
