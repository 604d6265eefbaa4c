#pragma once

// Dense complex matrix primitives with explicit tolerances: PSD classification,
// principal and inverse square roots, contraction tests, determinants, linear
// solves and block assembly. Everything downstream is built on these.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mopuc/errors.hpp"

namespace mopuc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Numeric thresholds used throughout the library. `psd` is relative to the
/// largest eigenvalue magnitude, so rescaling a measure does not flip
/// classifications; `boundary` bounds distance to the contraction boundary;
/// `residual` bounds verification residuals of computed factorizations.
struct Tolerances {
    double hermitian = 1e-10;
    double psd = 1e-10;
    double boundary = 1e-8;
    double residual = 1e-8;

    static Tolerances strict_profile() { return {1e-12, 1e-12, 1e-10, 1e-10}; }
    void validate() const;
};

bool all_finite(const CMatrix& m);
void require_finite(const CMatrix& m, const char* what);

/// Entrywise max modulus (the max-norm used for hermiticity checks).
double max_abs(const CMatrix& m);

/// Frobenius distance, the default residual norm in this library.
double frob(const CMatrix& m);

CMatrix identity(Index p);
CMatrix czeros(Index rows, Index cols);

/// Square matrix kept Hermitian by construction. The input must satisfy
/// max|M - M*| <= hermitian_tol; the stored value is (M + M*)/2 so that
/// asymmetry cannot drift through long pipelines.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const CMatrix& m, double hermitian_tol = Tolerances{}.hermitian);

    const CMatrix& mat() const { return mat_; }
    Index dim() const { return mat_.rows(); }

private:
    CMatrix mat_;
};

enum class PsdClass { PositiveDefinite, PositiveSemidefiniteSingular, Indefinite };

struct PsdVerdict {
    PsdClass cls = PsdClass::Indefinite;
    double min_eigenvalue = 0.0;

    bool positive_definite() const { return cls == PsdClass::PositiveDefinite; }
    bool positive_semidefinite() const { return cls != PsdClass::Indefinite; }
};

/// Classify by the smallest eigenvalue relative to max|eig| * tol.psd.
PsdVerdict psd_classify(const HermitianMatrix& h, const Tolerances& tol = {});

/// Unique PSD square root via spectral decomposition; eigenvalues below the
/// relative threshold are clamped to zero. Throws NotPositiveSemidefinite on
/// indefinite input.
HermitianMatrix principal_sqrt(const HermitianMatrix& h, const Tolerances& tol = {});

/// H^{-1/2} for positive definite H. Throws NotPositiveDefinite otherwise.
HermitianMatrix inv_sqrt(const HermitianMatrix& h, const Tolerances& tol = {});

struct ContractionVerdict {
    bool is_contraction = false;
    double sigma_max = 0.0;
};

/// Largest singular value test: contraction iff sigma_max <= 1 + tol.boundary.
ContractionVerdict contraction_check(const CMatrix& u, const Tolerances& tol = {});

/// Determinant by LU with partial pivoting.
Complex det(const CMatrix& m);

/// Solve A X = B. Requires every pivot magnitude above tol.psd * max|A|,
/// otherwise throws SingularSystem.
CMatrix solve(const CMatrix& a, const CMatrix& b, const Tolerances& tol = {});

/// Assemble a rectangular grid of equally sized blocks into one matrix.
CMatrix block_assemble(const std::vector<std::vector<CMatrix>>& blocks);

/// Extract the p x p block at block position (bi, bj).
CMatrix block_get(const CMatrix& m, Index bi, Index bj, Index p);

}  // namespace mopuc
