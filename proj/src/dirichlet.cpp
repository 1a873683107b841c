#include "dirmat/dirichlet.hpp"

namespace dirmat {

std::vector<BigInt> dirichlet_convolve(const CoefficientSequence& a,
                                       const CoefficientSequence& b, std::size_t n) {
  if (n == 0) throw InputError("dirichlet_convolve: n must be positive");
  if (a.length() < n || b.length() < n)
    throw InputError("dirichlet_convolve: inputs shorter than requested length");
  std::vector<BigInt> out(n, BigInt(0));
  for (std::size_t d = 1; d <= n; ++d) {
    const BigInt& ad = a.at(d);
    if (ad == 0) continue;
    for (std::size_t m = d; m <= n; m += d) out[m - 1] += ad * b.at(m / d);
  }
  return out;
}

CoefficientSequence dirichlet_inverse(const CoefficientSequence& a) {
  const std::size_t n = a.length();
  std::vector<BigInt> b(n, BigInt(0));
  b[0] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    BigInt acc(0);
    for (std::size_t d = 2; d * d <= m; ++d) {
      if (m % d != 0) continue;
      acc += a.at(d) * b[m / d - 1];
      if (d != m / d) acc += a.at(m / d) * b[d - 1];
    }
    acc += a.at(m);  // d = m term, b_1 = 1
    b[m - 1] = -acc;
  }
  return CoefficientSequence(std::move(b));
}

std::vector<int> mobius_sieve(std::size_t n) {
  if (n == 0) throw InputError("mobius_sieve: n must be positive");
  std::vector<int> mu(n + 1, 0);
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(n + 1, false);
  mu[1] = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      mu[i] = -1;
    }
    for (std::uint32_t p : primes) {
      std::size_t ip = i * p;
      if (ip > n) break;
      composite[ip] = true;
      if (i % p == 0) {
        mu[ip] = 0;
        break;
      }
      mu[ip] = -mu[i];
    }
  }
  return mu;
}

const BigInt& DnkTable::at(std::size_t m, int k) const {
  if (m < 1 || m > n_) throw InputError("DnkTable: index out of range");
  if (k < 0 || k > k_max_) throw InputError("DnkTable: level out of range");
  return levels_[static_cast<std::size_t>(k)][m - 1];
}

DnkTable d_table(const CoefficientSequence& a, std::size_t n, int k_max) {
  if (n == 0) throw InputError("d_table: n must be positive");
  if (k_max < 0) throw InputError("d_table: k_max must be non-negative");
  if (a.length() < n) throw InputError("d_table: coefficient sequence too short");

  std::vector<std::vector<BigInt>> levels(static_cast<std::size_t>(k_max) + 1,
                                          std::vector<BigInt>(n, BigInt(0)));
  levels[0][0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    const auto& prev = levels[static_cast<std::size_t>(k - 1)];
    auto& cur = levels[static_cast<std::size_t>(k)];
    // Sieve order: every m <= n picks up a_i * d(m/i, k-1) for each divisor i > 1.
    for (std::size_t i = 2; i <= n; ++i) {
      const BigInt& ai = a.at(i);
      if (ai == 0) continue;
      for (std::size_t j = 1; i * j <= n; ++j) {
        if (prev[j - 1] == 0) continue;
        cur[i * j - 1] += ai * prev[j - 1];
      }
    }
  }
  return DnkTable(n, k_max, std::move(levels));
}

}  // namespace dirmat
