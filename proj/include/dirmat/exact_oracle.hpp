#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dirmat/dense_matrix.hpp"
#include "dirmat/numeric.hpp"

namespace dirmat {

/// Polynomial with exact integer coefficients; coeff(i) is the coefficient
/// of x^i. Trailing zero coefficients are stripped on construction.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;  // zero polynomial
  explicit IntegerPolynomial(std::vector<BigInt> coeffs);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(std::size_t i) const;
  const std::vector<BigInt>& coefficients() const { return c_; }

  BigInt evaluate(const BigInt& x) const;
  BigComplex evaluate(const BigComplex& x) const;

  IntegerPolynomial operator*(const IntegerPolynomial& o) const;
  IntegerPolynomial operator+(const IntegerPolynomial& o) const;
  bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }

  /// Coefficients of p(x + shift).
  IntegerPolynomial taylor_shift(const BigInt& shift) const;

  std::string to_string() const;

 private:
  std::vector<BigInt> c_;
  static const BigInt kZero;
};

/// (x + a)^m expanded.
IntegerPolynomial binomial_power(const BigInt& a, std::size_t m);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt det_exact(const DenseMatrix& m);

inline constexpr std::size_t kCharpolyDimensionCap = 512;

/// Exact characteristic polynomial det(xI - M), monic of degree n. Evaluates
/// the determinant at the n+1 integer nodes 0, 1, -1, 2, -2, ... and
/// interpolates exactly over the rationals. Dimension capped at 512.
IntegerPolynomial charpoly_exact(const DenseMatrix& m);

enum class EigSide { Right, Left };

/// Relative residual ||M v - lambda v||_2 / ||v||_2 (or the transpose
/// analogue for the left side), computed in double precision with
/// compensated summation.
double eig_residual(const DenseMatrix& m, std::complex<double> lambda,
                    std::span<const std::complex<double>> vec, EigSide side);

}  // namespace dirmat
