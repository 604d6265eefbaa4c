#include "mopuc/polynomial.hpp"

#include <algorithm>

namespace mopuc {

MatrixPolynomial::MatrixPolynomial(Index p, std::vector<CMatrix> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
    if (p_ <= 0) throw InvalidInput("MatrixPolynomial: dimension must be positive");
    if (coeffs_.empty()) throw InvalidInput("MatrixPolynomial: empty coefficient list");
    for (const CMatrix& c : coeffs_) {
        if (c.rows() != p_ || c.cols() != p_) {
            throw DimensionMismatch("MatrixPolynomial: coefficient shape mismatch");
        }
        require_finite(c, "MatrixPolynomial");
    }
}

MatrixPolynomial MatrixPolynomial::constant(const CMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("MatrixPolynomial::constant");
    return MatrixPolynomial(a.rows(), {a});
}

MatrixPolynomial MatrixPolynomial::monomial(Index p, int degree) {
    if (degree < 0) throw InvalidInput("MatrixPolynomial::monomial: negative degree");
    std::vector<CMatrix> c(static_cast<std::size_t>(degree) + 1, czeros(p, p));
    c.back() = identity(p);
    return MatrixPolynomial(p, std::move(c));
}

const CMatrix& MatrixPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
        throw InvalidInput("MatrixPolynomial::coeff: index out of range");
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

CMatrix MatrixPolynomial::coeff_or_zero(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return czeros(p_, p_);
    return coeffs_[static_cast<std::size_t>(k)];
}

CMatrix MatrixPolynomial::operator()(const Complex& z) const {
    CMatrix acc = coeffs_.back();
    for (int k = degree() - 1; k >= 0; --k) {
        acc = acc * z + coeffs_[static_cast<std::size_t>(k)];
    }
    return acc;
}

MatrixPolynomial MatrixPolynomial::operator+(const MatrixPolynomial& other) const {
    if (p_ != other.p_) throw DimensionMismatch("MatrixPolynomial: dimension mismatch");
    std::vector<CMatrix> c(std::max(coeffs_.size(), other.coeffs_.size()), czeros(p_, p_));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = coeff_or_zero(static_cast<int>(k)) + other.coeff_or_zero(static_cast<int>(k));
    }
    return MatrixPolynomial(p_, std::move(c));
}

MatrixPolynomial MatrixPolynomial::operator-(const MatrixPolynomial& other) const {
    if (p_ != other.p_) throw DimensionMismatch("MatrixPolynomial: dimension mismatch");
    std::vector<CMatrix> c(std::max(coeffs_.size(), other.coeffs_.size()), czeros(p_, p_));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = coeff_or_zero(static_cast<int>(k)) - other.coeff_or_zero(static_cast<int>(k));
    }
    return MatrixPolynomial(p_, std::move(c));
}

MatrixPolynomial MatrixPolynomial::shifted(int k) const {
    if (k < 0) throw InvalidInput("MatrixPolynomial::shifted: negative shift");
    std::vector<CMatrix> c(coeffs_.size() + static_cast<std::size_t>(k), czeros(p_, p_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return MatrixPolynomial(p_, std::move(c));
}

MatrixPolynomial MatrixPolynomial::right_multiplied(const CMatrix& a) const {
    std::vector<CMatrix> c;
    c.reserve(coeffs_.size());
    for (const CMatrix& ck : coeffs_) c.push_back(ck * a);
    return MatrixPolynomial(p_, std::move(c));
}

MatrixPolynomial MatrixPolynomial::left_multiplied(const CMatrix& a) const {
    std::vector<CMatrix> c;
    c.reserve(coeffs_.size());
    for (const CMatrix& ck : coeffs_) c.push_back(a * ck);
    return MatrixPolynomial(p_, std::move(c));
}

MatrixPolynomial reverse(const MatrixPolynomial& poly, int n) {
    if (poly.degree() > n) throw DegreeExceeds("reverse: degree exceeds n");
    std::vector<CMatrix> c(static_cast<std::size_t>(n) + 1, czeros(poly.dim(), poly.dim()));
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = poly.coeff_or_zero(n - k).adjoint();
    }
    return MatrixPolynomial(poly.dim(), std::move(c));
}

CMatrix evaluate(const MatrixPolynomial& poly, const Complex& z) { return poly(z); }

}  // namespace mopuc
