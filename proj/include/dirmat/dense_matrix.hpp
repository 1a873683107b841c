#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "dirmat/numeric.hpp"
#include "dirmat/sequences.hpp"

namespace dirmat {

/// Square dense matrix in exact-integer or complex-float scalar mode.
/// Row-major storage, zero-based element access. Intended for oracle-scale
/// dimensions only; large-n work never materializes matrices.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t dim, ScalarMode mode);

  static DenseMatrix identity(std::size_t dim, ScalarMode mode = ScalarMode::ExactInt);

  std::size_t dim() const { return dim_; }
  ScalarMode mode() const { return mode_; }

  BigInt& int_at(std::size_t i, std::size_t j);
  const BigInt& int_at(std::size_t i, std::size_t j) const;
  std::complex<double>& cplx_at(std::size_t i, std::size_t j);
  const std::complex<double>& cplx_at(std::size_t i, std::size_t j) const;

  /// Element as complex<double> regardless of mode.
  std::complex<double> as_complex(std::size_t i, std::size_t j) const;

  bool operator==(const DenseMatrix& o) const;

 private:
  std::size_t dim_;
  ScalarMode mode_;
  std::vector<BigInt> iv_;
  std::vector<std::complex<double>> cv_;
};

/// E_n(k): ones exactly at positions (i, k*i), zero elsewhere. Exact mode.
DenseMatrix build_E(std::size_t n, std::size_t k);

/// D_n = sum_k a_k E_n(k): upper triangular, entry (i, j) = a_{j/i} when i | j.
DenseMatrix build_D(const CoefficientSequence& a, std::size_t n);

/// Which series the triangular part carries: the coefficients themselves or
/// their formal Dirichlet inverse.
enum class AVariant { A, Atilde };

/// A_n = W_n + D_n (variant A) or W_n + D_n^{-1} (variant Atilde), where W_n
/// holds (0, w_2, ..., w_n) down the first column. Scalar mode follows the
/// weight vector; the unit-coefficient specializations B_n and C_n are
/// obtained by passing unit sequences.
DenseMatrix build_A(const CoefficientSequence& a, const WeightVector& w, std::size_t n,
                    AVariant variant);

/// Standard product; both operands must share dimension and scalar mode.
DenseMatrix matrix_product(const DenseMatrix& lhs, const DenseMatrix& rhs);

}  // namespace dirmat
