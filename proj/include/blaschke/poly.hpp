#pragma once

#include <span>
#include <vector>

#include "blaschke/disk.hpp"

namespace blaschke {

/// Dense polynomial over C, coefficients in ascending degree.
/// Trailing coefficients below 1e-14 * max|coeff| are trimmed on construction.
struct ComplexPolynomial {
    std::vector<Complex> coeffs;

    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<Complex> c);
    static ComplexPolynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);

    /// Degree after normalization; the zero polynomial has degree -1.
    int degree() const noexcept;
    bool is_zero() const noexcept { return coeffs.empty(); }

    Complex eval(Complex z) const;  // Horner
};

ComplexPolynomial poly_mul(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial poly_add(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial poly_sub(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial poly_derivative(const ComplexPolynomial& p);

/// sum_k |coeff_k| max(1, |z|)^k; the residual scale used by root acceptance.
double residual_scale(const ComplexPolynomial& p, Complex z);

/// All degree-many roots, with multiplicity.
///
/// Aberth-Ehrlich simultaneous iteration from a perturbed circle of initial
/// guesses (radius from the Cauchy bound), followed by Newton polishing of
/// simple roots. Roots at the origin are deflated exactly first. Roots within
/// 1e-7 of each other are merged into clusters reported as repeated centroids.
/// Throws std::invalid_argument when degree < 1.
std::vector<Complex> find_roots(const ComplexPolynomial& p);

}  // namespace blaschke
