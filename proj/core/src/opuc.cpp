#include "mopuc/opuc.hpp"

#include <cmath>
#include <numbers>

namespace mopuc {

namespace {

constexpr int kPsiMaxOrder = 3;
constexpr Index kPsiMaxDim = 3;
constexpr int kProbePoints = 64;

void check_dims(const MatrixPolynomial& a, const MatrixPolynomial& b, const CircleMeasure& mu) {
    if (a.dim() != mu.dim() || b.dim() != mu.dim()) {
        throw DimensionMismatch("inner product: polynomial/measure dimension mismatch");
    }
}

/// Determinant of m with row r and column c removed.
Complex minor_det(const CMatrix& m, Index r, Index c) {
    const Index n = m.rows();
    CMatrix sub(n - 1, n - 1);
    for (Index i = 0, si = 0; i < n; ++i) {
        if (i == r) continue;
        for (Index j = 0, sj = 0; j < n; ++j) {
            if (j == c) continue;
            sub(si, sj) = m(i, j);
            ++sj;
        }
        ++si;
    }
    return det(sub);
}

double sign_of(Index r, Index c) { return ((r + c) % 2 == 0) ? 1.0 : -1.0; }

std::vector<Complex> probe_points(const CircleMeasure* mu) {
    std::vector<Complex> pts;
    if (mu != nullptr) {
        pts.reserve(mu->atoms().size() + kProbePoints);
        for (const CircleAtom& a : mu->atoms()) pts.push_back(std::polar(1.0, a.theta));
    }
    for (int k = 0; k < kProbePoints; ++k) {
        pts.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / kProbePoints));
    }
    return pts;
}

/// Real determinant of a Hermitian block Toeplitz matrix.
double real_det(const CMatrix& m) {
    const Complex d = det(m);
    if (std::abs(d.imag()) > 1e-8 * std::max(1.0, std::abs(d.real()))) {
        throw ImaginaryResidue("determinant of a Hermitian matrix came out complex");
    }
    return d.real();
}

}  // namespace

CMatrix inner_right(const MatrixPolynomial& a, const MatrixPolynomial& b, const CircleMeasure& mu) {
    check_dims(a, b, mu);
    CMatrix acc = czeros(mu.dim(), mu.dim());
    for (const CircleAtom& atom : mu.atoms()) {
        const Complex z = std::polar(1.0, atom.theta);
        acc += a(z).adjoint() * atom.weight.mat() * b(z);
    }
    return acc;
}

CMatrix inner_left(const MatrixPolynomial& a, const MatrixPolynomial& b, const CircleMeasure& mu) {
    check_dims(a, b, mu);
    CMatrix acc = czeros(mu.dim(), mu.dim());
    for (const CircleAtom& atom : mu.atoms()) {
        const Complex z = std::polar(1.0, atom.theta);
        acc += a(z) * atom.weight.mat() * b(z).adjoint();
    }
    return acc;
}

CMatrix inner_monomial_right(const MomentSequence& seq, int k, const MatrixPolynomial& q) {
    if (q.dim() != seq.dim()) throw DimensionMismatch("inner_monomial_right");
    CMatrix acc = czeros(seq.dim(), seq.dim());
    for (int l = 0; l <= q.degree(); ++l) {
        acc += seq.gamma(l - k) * q.coeff(l);
    }
    return acc;
}

CMatrix inner_monomial_left(const MomentSequence& seq, const MatrixPolynomial& p, int k) {
    if (p.dim() != seq.dim()) throw DimensionMismatch("inner_monomial_left");
    CMatrix acc = czeros(seq.dim(), seq.dim());
    for (int l = 0; l <= p.degree(); ++l) {
        acc += p.coeff(l) * seq.gamma(l - k);
    }
    return acc;
}

MatrixPolynomial psi_determinantal(const MomentSequence& seq, int m, Side side) {
    const Index p = seq.dim();
    if (m < 0) throw InvalidInput("psi_determinantal: order must be nonnegative");
    if (m > kPsiMaxOrder || p > kPsiMaxDim) {
        throw SizeGuard("psi_determinantal: guarded to m <= 3 and p <= 3");
    }
    const CMatrix t = build_toeplitz(seq, m).base;
    std::vector<CMatrix> coeffs(static_cast<std::size_t>(m) + 1, czeros(p, p));
    for (Index i = 0; i < p; ++i) {
        for (Index j = 0; j < p; ++j) {
            if (side == Side::Right) {
                // entry (i,j): row mp+j carries z^k at column kp+i
                const Index row = static_cast<Index>(m) * p + j;
                for (int k = 0; k <= m; ++k) {
                    const Index col = static_cast<Index>(k) * p + i;
                    coeffs[static_cast<std::size_t>(k)](i, j) =
                        sign_of(row, col) * minor_det(t, row, col);
                }
            } else {
                // entry (i,j): column i carries z^{m-r} at row rp+j
                const Index col = i;
                for (int r = 0; r <= m; ++r) {
                    const Index row = static_cast<Index>(r) * p + j;
                    coeffs[static_cast<std::size_t>(m - r)](i, j) =
                        sign_of(row, col) * minor_det(t, row, col);
                }
            }
        }
    }
    return MatrixPolynomial(p, std::move(coeffs));
}

OrthogonalityResiduals theorem31_check(const MomentSequence& seq, int m, const Tolerances&) {
    const MatrixPolynomial psi_r = psi_determinantal(seq, m, Side::Right);
    const MatrixPolynomial psi_l = psi_determinantal(seq, m, Side::Left);
    const double dt = real_det(build_toeplitz(seq, m).base);
    const CMatrix target = dt * identity(seq.dim());
    OrthogonalityResiduals out;
    for (int k = 0; k < m; ++k) {
        out.low_right = std::max(out.low_right, frob(inner_monomial_right(seq, k, psi_r)));
        out.low_left = std::max(out.low_left, frob(inner_monomial_left(seq, psi_l, k)));
    }
    out.top_right = frob(inner_monomial_right(seq, m, psi_r) - target);
    out.top_left = frob(inner_monomial_left(seq, psi_l, m) - target);
    return out;
}

namespace {

MatrixPolynomial monic_right(const MomentSequence& seq, int m, const Tolerances& tol) {
    const Index p = seq.dim();
    std::vector<CMatrix> coeffs(static_cast<std::size_t>(m) + 1, czeros(p, p));
    coeffs.back() = identity(p);
    if (m > 0) {
        const CMatrix tm1 = build_toeplitz(seq, m - 1).base;
        CMatrix rhs(m * p, p);
        for (int k = 0; k < m; ++k) rhs.block(k * p, 0, p, p) = -seq.gamma(m - k);
        const CMatrix x = Eigen::LDLT<CMatrix>(tm1).solve(rhs);
        for (int l = 0; l < m; ++l) coeffs[static_cast<std::size_t>(l)] = x.block(l * p, 0, p, p);
        const double res = max_abs(tm1 * x - rhs);
        if (res > tol.residual * std::max(1.0, max_abs(tm1))) {
            throw NotInterior("monic system: Toeplitz solve residual too large at order " +
                              std::to_string(m));
        }
    }
    return MatrixPolynomial(p, std::move(coeffs));
}

MatrixPolynomial monic_left(const MomentSequence& seq, int m, const Tolerances& tol) {
    const Index p = seq.dim();
    std::vector<CMatrix> coeffs(static_cast<std::size_t>(m) + 1, czeros(p, p));
    coeffs.back() = identity(p);
    if (m > 0) {
        // adjoint form of the left orthogonality conditions: block (k,l) is
        // gamma_{k-l}, unknowns are the adjoints of the coefficients
        CMatrix g(m * p, m * p);
        for (int k = 0; k < m; ++k) {
            for (int l = 0; l < m; ++l) g.block(k * p, l * p, p, p) = seq.gamma(k - l);
        }
        CMatrix rhs(m * p, p);
        for (int k = 0; k < m; ++k) rhs.block(k * p, 0, p, p) = -seq.gamma(k - m);
        const CMatrix y = Eigen::LDLT<CMatrix>(g).solve(rhs);
        for (int l = 0; l < m; ++l) {
            coeffs[static_cast<std::size_t>(l)] = y.block(l * p, 0, p, p).adjoint();
        }
        const double res = max_abs(g * y - rhs);
        if (res > tol.residual * std::max(1.0, max_abs(g))) {
            throw NotInterior("monic system: left solve residual too large at order " +
                              std::to_string(m));
        }
    }
    return MatrixPolynomial(p, std::move(coeffs));
}

}  // namespace

OrthoSystem monic_system(const MomentSequence& seq, int max_order, const Tolerances& tol) {
    if (max_order < 0) throw InvalidInput("monic_system: order must be nonnegative");
    if (max_order > seq.max_order()) throw InsufficientData("monic_system: not enough moments");
    OrthoSystem sys;
    sys.order = max_order;
    const std::vector<MomentBall> balls = moment_balls(seq, max_order + 1, tol);
    std::vector<CMatrix> sqrt_r, sqrt_l;
    for (int m = 0; m <= max_order; ++m) {
        sys.monic_right.push_back(monic_right(seq, m, tol));
        sys.monic_left.push_back(monic_left(seq, m, tol));
        const MomentBall& ball = balls[static_cast<std::size_t>(m)];
        sys.kappa_right.push_back(inv_sqrt(ball.right_radius, tol));
        sys.kappa_left.push_back(inv_sqrt(ball.left_radius, tol));
        sqrt_r.push_back(principal_sqrt(ball.right_radius, tol).mat());
        sqrt_l.push_back(principal_sqrt(ball.left_radius, tol).mat());
        sys.orthonormal_right.push_back(
            sys.monic_right.back().right_multiplied(sys.kappa_right.back().mat()));
        sys.orthonormal_left.push_back(
            sys.monic_left.back().left_multiplied(sys.kappa_left.back().mat()));
    }
    for (int m = 0; m < max_order; ++m) {
        sys.rho_right.push_back(sqrt_r[static_cast<std::size_t>(m + 1)] *
                                sys.kappa_right[static_cast<std::size_t>(m)].mat());
        sys.rho_left.push_back(sys.kappa_left[static_cast<std::size_t>(m)].mat() *
                               sqrt_l[static_cast<std::size_t>(m + 1)]);
    }
    return sys;
}

CMatrix verblunsky_extract(const MomentSequence& seq, int m, const Tolerances& tol) {
    if (m + 1 > seq.max_order()) {
        throw InsufficientData("verblunsky_extract: gamma_{m+1} not available");
    }
    const MatrixPolynomial phi = monic_right(seq, m, tol);
    const MomentBall ball = moment_ball(seq, m, tol);
    // <I, z Phi_m^R>_R = sum_l gamma_{l+1} Phi_l
    const CMatrix ip = inner_monomial_right(seq, 0, phi.shifted(1));
    return inv_sqrt(ball.left_radius, tol).mat() * ip * inv_sqrt(ball.right_radius, tol).mat();
}

VerblunskySequence verblunsky_sequence(const MomentSequence& seq, int count,
                                       const Tolerances& tol) {
    VerblunskySequence h;
    h.coeffs.reserve(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) h.coeffs.push_back(verblunsky_extract(seq, m, tol));
    return h;
}

RecursionResiduals szego_residuals(const OrthoSystem& sys, const VerblunskySequence& h,
                                   const CircleMeasure& mu, int m) {
    if (m + 1 > sys.order) throw InsufficientData("szego_residuals: system order too small");
    if (m >= static_cast<int>(h.coeffs.size())) {
        throw InsufficientData("szego_residuals: reflection coefficient missing");
    }
    const CMatrix& hm1 = h.coeffs[static_cast<std::size_t>(m)];
    const MatrixPolynomial& phi_l = sys.orthonormal_left[static_cast<std::size_t>(m)];
    const MatrixPolynomial& phi_l_next = sys.orthonormal_left[static_cast<std::size_t>(m + 1)];
    const MatrixPolynomial& phi_r = sys.orthonormal_right[static_cast<std::size_t>(m)];
    const MatrixPolynomial& phi_r_next = sys.orthonormal_right[static_cast<std::size_t>(m + 1)];
    const MatrixPolynomial rev_r = reverse(phi_r, m);
    const MatrixPolynomial rev_l = reverse(phi_l, m);
    const CMatrix& rho_l = sys.rho_left[static_cast<std::size_t>(m)];
    const CMatrix& rho_r = sys.rho_right[static_cast<std::size_t>(m)];
    RecursionResiduals out;
    for (const Complex& z : probe_points(&mu)) {
        out.left = std::max(out.left,
                            frob(z * phi_l(z) - rho_l * phi_l_next(z) - hm1 * rev_r(z)));
        out.right = std::max(out.right,
                             frob(z * phi_r(z) - phi_r_next(z) * rho_r - rev_l(z) * hm1));
    }
    return out;
}

RecursionResiduals monic_szego_residuals(const OrthoSystem& sys, const std::vector<CMatrix>& abar,
                                         int m) {
    if (m + 1 > sys.order) throw InsufficientData("monic_szego_residuals: system order too small");
    if (m >= static_cast<int>(abar.size())) {
        throw InsufficientData("monic_szego_residuals: coefficient missing");
    }
    const CMatrix& a = abar[static_cast<std::size_t>(m)];
    const MatrixPolynomial& phi_l = sys.monic_left[static_cast<std::size_t>(m)];
    const MatrixPolynomial& phi_l_next = sys.monic_left[static_cast<std::size_t>(m + 1)];
    const MatrixPolynomial& phi_r = sys.monic_right[static_cast<std::size_t>(m)];
    const MatrixPolynomial& phi_r_next = sys.monic_right[static_cast<std::size_t>(m + 1)];
    const MatrixPolynomial rev_r = reverse(phi_r, m);
    // the right-side recursion couples to the reversed *left* polynomial; this
    // follows from the orthonormal recursions after the monic renormalization
    const MatrixPolynomial rev_l = reverse(phi_l, m);
    RecursionResiduals out;
    for (const Complex& z : probe_points(nullptr)) {
        out.left = std::max(out.left,
                            frob(z * phi_l(z) - phi_l_next(z) - a.adjoint() * rev_r(z)));
        out.right = std::max(out.right,
                             frob(z * phi_r(z) - phi_r_next(z) - rev_l(z) * a));
    }
    return out;
}

}  // namespace mopuc
