#pragma once

#include <cstddef>
#include <vector>

#include "dirmat/numeric.hpp"
#include "dirmat/sequences.hpp"

namespace dirmat {

/// Dirichlet convolution truncated to length n:
/// out[m] = sum over divisors d of m of a_d * b_{m/d}, for 1 <= m <= n.
/// Returned vector is zero-based (out[i] is the coefficient of index i+1)
/// and carries no normalization requirement.
std::vector<BigInt> dirichlet_convolve(const CoefficientSequence& a,
                                       const CoefficientSequence& b, std::size_t n);

/// Formal inverse b of a under Dirichlet convolution, same length as a.
/// b_1 = 1 and b_m = -sum_{d | m, d > 1} a_d b_{m/d}.
CoefficientSequence dirichlet_inverse(const CoefficientSequence& a);

/// Moebius function by linear sieve. Returned vector has size n+1 with
/// mu[0] = 0 unused and mu[k] in {-1, 0, 1} for 1 <= k <= n.
std::vector<int> mobius_sieve(std::size_t n);

/// Exact table of d(m, k) for 1 <= m <= n and 0 <= k <= k_max, where d(m, k)
/// is the coefficient of index m in the k-th convolution power of (a - identity).
/// Base cases: d(1, 0) = 1, d(m, 0) = 0 for m > 1; d(m, k) = 0 for m < 2^k.
class DnkTable {
 public:
  DnkTable(std::size_t n, int k_max, std::vector<std::vector<BigInt>> levels)
      : n_(n), k_max_(k_max), levels_(std::move(levels)) {}

  std::size_t n_max() const { return n_; }
  int k_max() const { return k_max_; }

  /// d(m, k); m is one-based, k in [0, k_max].
  const BigInt& at(std::size_t m, int k) const;

 private:
  std::size_t n_;
  int k_max_;
  std::vector<std::vector<BigInt>> levels_;  // levels_[k][m-1]
};

/// Build the d(m, k) table by the divisor-sum recurrence
/// d(m, k) = sum_{i | m, i > 1} a_i d(m/i, k-1).
DnkTable d_table(const CoefficientSequence& a, std::size_t n, int k_max);

}  // namespace dirmat
