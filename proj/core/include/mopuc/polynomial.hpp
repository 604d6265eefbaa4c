#pragma once

// Polynomials with square complex matrix coefficients, lowest degree first.

#include <vector>

#include "mopuc/matcore.hpp"

namespace mopuc {

class MatrixPolynomial {
public:
    /// Coefficients lowest degree first; the list must be non-empty.
    MatrixPolynomial(Index p, std::vector<CMatrix> coeffs);

    static MatrixPolynomial zero(Index p) { return MatrixPolynomial(p, {czeros(p, p)}); }
    static MatrixPolynomial constant(const CMatrix& a);
    /// z^degree * I_p.
    static MatrixPolynomial monomial(Index p, int degree);

    Index dim() const { return p_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<CMatrix>& coeffs() const { return coeffs_; }
    const CMatrix& coeff(int k) const;
    /// Coefficient of z^k, zero beyond the stored degree.
    CMatrix coeff_or_zero(int k) const;

    /// Horner evaluation.
    CMatrix operator()(const Complex& z) const;

    MatrixPolynomial operator+(const MatrixPolynomial& other) const;
    MatrixPolynomial operator-(const MatrixPolynomial& other) const;
    /// Multiply by z^k.
    MatrixPolynomial shifted(int k) const;
    /// Coefficients multiplied by a from the right (P * a).
    MatrixPolynomial right_multiplied(const CMatrix& a) const;
    /// Coefficients multiplied by a from the left (a * P).
    MatrixPolynomial left_multiplied(const CMatrix& a) const;

private:
    Index p_ = 0;
    std::vector<CMatrix> coeffs_;
};

/// Reversed polynomial z^n P(1/conj(z))^*: coefficient k of the result is the
/// adjoint of coefficient n-k of P. Requires degree(P) <= n.
MatrixPolynomial reverse(const MatrixPolynomial& poly, int n);

CMatrix evaluate(const MatrixPolynomial& poly, const Complex& z);

}  // namespace mopuc
