#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "dirmat/numeric.hpp"

namespace dirmat {

/// Scalar mode of weight vectors and dense matrices. Mixed-mode binary
/// operations are rejected, never coerced.
enum class ScalarMode { ExactInt, ComplexFloat };

/// Truncated Dirichlet coefficient sequence a_1..a_N with a_1 = 1.
/// Storage is zero-based: values()[i] is the coefficient of index i+1.
class CoefficientSequence {
 public:
  explicit CoefficientSequence(std::vector<BigInt> values);

  /// All-ones sequence of length n.
  static CoefficientSequence ones(std::size_t n);
  /// Convolution identity (1, 0, 0, ...) of length n.
  static CoefficientSequence identity(std::size_t n);
  /// Parse one decimal integer per line; first value must be 1.
  static CoefficientSequence from_file(const std::string& path);

  std::size_t length() const { return values_.size(); }
  /// One-based access, i in [1, length].
  const BigInt& at(std::size_t i) const;
  const std::vector<BigInt>& values() const { return values_; }

 private:
  std::vector<BigInt> values_;
};

/// Weights w_1..w_n with w_1 = 1, in exact-integer or complex-float mode.
class WeightVector {
 public:
  static WeightVector ones(std::size_t n);
  static WeightVector from_integers(std::vector<BigInt> values);
  static WeightVector from_complex(std::vector<std::complex<double>> values);
  /// w_k = k^{-s} in complex-float mode.
  static WeightVector dirichlet(std::size_t n, std::complex<double> s);
  /// Parse one weight per line: all-integer lines give exact mode, otherwise
  /// each line is "re" or "re im" parsed as complex-float.
  static WeightVector from_file(const std::string& path);

  ScalarMode mode() const { return mode_; }
  std::size_t length() const;
  bool is_unit() const;

  /// One-based access; requires exact mode.
  const BigInt& int_at(std::size_t k) const;
  /// One-based access; works in both modes (exact values are converted).
  std::complex<double> complex_at(std::size_t k) const;

  const std::vector<BigInt>& int_values() const;
  const std::vector<std::complex<double>>& complex_values() const;

 private:
  WeightVector() = default;
  ScalarMode mode_ = ScalarMode::ExactInt;
  std::vector<BigInt> ints_;
  std::vector<std::complex<double>> cplx_;
};

}  // namespace dirmat
