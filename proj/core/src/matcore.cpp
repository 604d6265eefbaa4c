#include "mopuc/matcore.hpp"

#include <cmath>
#include <string>

namespace mopuc {

void Tolerances::validate() const {
    if (!(hermitian > 0.0) || !(psd > 0.0) || !(boundary > 0.0) || !(residual > 0.0)) {
        throw InvalidInput("tolerances must be strictly positive");
    }
}

bool all_finite(const CMatrix& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            const Complex& v = m(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        }
    }
    return true;
}

void require_finite(const CMatrix& m, const char* what) {
    if (!all_finite(m)) {
        throw InvalidInput(std::string(what) + ": non-finite entries");
    }
}

double max_abs(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double frob(const CMatrix& m) { return m.norm(); }

CMatrix identity(Index p) { return CMatrix::Identity(p, p); }

CMatrix czeros(Index rows, Index cols) { return CMatrix::Zero(rows, cols); }

HermitianMatrix::HermitianMatrix(const CMatrix& m, double hermitian_tol) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("HermitianMatrix: input must be square");
    }
    require_finite(m, "HermitianMatrix");
    const CMatrix adj = m.adjoint();
    const double asym = max_abs(m - adj);
    const double scale = std::max(1.0, max_abs(m));
    if (asym > hermitian_tol * scale) {
        throw InvalidInput("HermitianMatrix: asymmetry " + std::to_string(asym) +
                           " exceeds tolerance");
    }
    mat_ = 0.5 * (m + adj);
}

namespace {

Eigen::VectorXd hermitian_eigenvalues(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.mat(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw InvalidInput("eigenvalue computation failed");
    }
    return es.eigenvalues();
}

}  // namespace

PsdVerdict psd_classify(const HermitianMatrix& h, const Tolerances& tol) {
    tol.validate();
    if (h.dim() == 0) throw InvalidInput("psd_classify: empty matrix");
    const Eigen::VectorXd ev = hermitian_eigenvalues(h);
    const double lo = ev.minCoeff();
    const double threshold = tol.psd * ev.cwiseAbs().maxCoeff();
    PsdVerdict v;
    v.min_eigenvalue = lo;
    if (lo > threshold) {
        v.cls = PsdClass::PositiveDefinite;
    } else if (lo >= -threshold) {
        v.cls = PsdClass::PositiveSemidefiniteSingular;
    } else {
        v.cls = PsdClass::Indefinite;
    }
    return v;
}

HermitianMatrix principal_sqrt(const HermitianMatrix& h, const Tolerances& tol) {
    tol.validate();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.mat());
    if (es.info() != Eigen::Success) throw InvalidInput("principal_sqrt: eigensolver failed");
    Eigen::VectorXd ev = es.eigenvalues();
    const double threshold = tol.psd * ev.cwiseAbs().maxCoeff();
    if (ev.minCoeff() < -threshold) {
        throw NotPositiveSemidefinite("principal_sqrt: matrix is indefinite");
    }
    for (Index i = 0; i < ev.size(); ++i) {
        ev(i) = ev(i) <= threshold ? 0.0 : std::sqrt(ev(i));
    }
    const CMatrix root =
        es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    return HermitianMatrix(root, 1e-8);
}

HermitianMatrix inv_sqrt(const HermitianMatrix& h, const Tolerances& tol) {
    tol.validate();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.mat());
    if (es.info() != Eigen::Success) throw InvalidInput("inv_sqrt: eigensolver failed");
    Eigen::VectorXd ev = es.eigenvalues();
    const double threshold = tol.psd * ev.cwiseAbs().maxCoeff();
    if (ev.minCoeff() <= threshold) {
        throw NotPositiveDefinite("inv_sqrt: matrix is not positive definite");
    }
    for (Index i = 0; i < ev.size(); ++i) {
        ev(i) = 1.0 / std::sqrt(ev(i));
    }
    const CMatrix root =
        es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    return HermitianMatrix(root, 1e-8);
}

ContractionVerdict contraction_check(const CMatrix& u, const Tolerances& tol) {
    tol.validate();
    if (u.rows() != u.cols()) throw DimensionMismatch("contraction_check: matrix must be square");
    require_finite(u, "contraction_check");
    Eigen::JacobiSVD<CMatrix> svd(u);
    const double sigma = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    return {sigma <= 1.0 + tol.boundary, sigma};
}

Complex det(const CMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("det: matrix must be square");
    require_finite(m, "det");
    return Eigen::PartialPivLU<CMatrix>(m).determinant();
}

CMatrix solve(const CMatrix& a, const CMatrix& b, const Tolerances& tol) {
    tol.validate();
    if (a.rows() != a.cols()) throw DimensionMismatch("solve: A must be square");
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: incompatible right hand side");
    require_finite(a, "solve(A)");
    require_finite(b, "solve(B)");
    Eigen::PartialPivLU<CMatrix> lu(a);
    const double pivot_floor = tol.psd * std::max(max_abs(a), 1e-300);
    for (Index i = 0; i < a.rows(); ++i) {
        if (std::abs(lu.matrixLU()(i, i)) <= pivot_floor) {
            throw SingularSystem("solve: pivot below threshold");
        }
    }
    CMatrix x = lu.solve(b);
    const double res = max_abs(a * x - b);
    const double scale = std::max(max_abs(a) * std::max(max_abs(x), 1.0), 1.0);
    if (res > tol.residual * scale) {
        throw SingularSystem("solve: residual " + std::to_string(res) + " too large");
    }
    return x;
}

CMatrix block_assemble(const std::vector<std::vector<CMatrix>>& blocks) {
    if (blocks.empty() || blocks.front().empty()) {
        throw InvalidInput("block_assemble: empty grid");
    }
    const Index brows = static_cast<Index>(blocks.size());
    const Index bcols = static_cast<Index>(blocks.front().size());
    const Index r = blocks[0][0].rows();
    const Index c = blocks[0][0].cols();
    CMatrix out(brows * r, bcols * c);
    for (Index i = 0; i < brows; ++i) {
        if (static_cast<Index>(blocks[i].size()) != bcols) {
            throw DimensionMismatch("block_assemble: ragged grid");
        }
        for (Index j = 0; j < bcols; ++j) {
            const CMatrix& blk = blocks[i][j];
            if (blk.rows() != r || blk.cols() != c) {
                throw DimensionMismatch("block_assemble: inconsistent block shapes");
            }
            out.block(i * r, j * c, r, c) = blk;
        }
    }
    return out;
}

CMatrix block_get(const CMatrix& m, Index bi, Index bj, Index p) {
    if (p <= 0 || m.rows() % p != 0 || m.cols() % p != 0) {
        throw DimensionMismatch("block_get: matrix is not a grid of p x p blocks");
    }
    if (bi < 0 || bj < 0 || (bi + 1) * p > m.rows() || (bj + 1) * p > m.cols()) {
        throw DimensionMismatch("block_get: block index out of range");
    }
    return m.block(bi * p, bj * p, p, p);
}

}  // namespace mopuc
