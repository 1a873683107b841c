#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dirmat/dirichlet.hpp"
#include "dirmat/numeric.hpp"
#include "dirmat/sequences.hpp"

namespace dirmat {

/// The distinct values of floor(n/i) for 1 <= i <= n, sorted ascending, with
/// O(1) lookup from value to slot. Size is isqrt(n) + n/(isqrt(n)+1), and the
/// set is closed under further floor division.
class FloorValueSet {
 public:
  explicit FloorValueSet(std::uint64_t n);

  std::uint64_t n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  std::uint64_t value_at(std::size_t slot) const { return values_[slot]; }
  const std::vector<std::uint64_t>& values() const { return values_; }

  bool contains(std::uint64_t m) const;
  /// Slot of a member value; throws InputError for non-members.
  std::size_t slot_of(std::uint64_t m) const;

 private:
  std::size_t slot_unchecked(std::uint64_t m) const;
  std::uint64_t n_;
  std::uint64_t sqrt_n_;
  std::uint64_t small_count_;  // n / (sqrt_n + 1)
  std::vector<std::uint64_t> values_;
};

/// s = floor(n / (floor(sqrt(n)) + 1)), the split index of the two-range
/// summation. Always equals floor(sqrt(n)) or floor(sqrt(n)) - 1; the
/// two-case characterization is checked on every call.
std::uint64_t split_point(std::uint64_t n);

inline constexpr std::uint64_t kVnkNaiveCap = 100000;
inline constexpr std::uint64_t kVnkLatticeCap = 5000;

/// v(n, k) = sum_{j <= n} w_j d(j, k), straight from the definition through a
/// d-table. Exact-integer weights only; n capped at 1e5.
BigInt vnk_naive(const CoefficientSequence& a, const WeightVector& w, std::uint64_t n,
                 int k);
/// Same, reusing a prebuilt d-table (table.n_max() >= n, table.k_max() >= k).
BigInt vnk_naive(const DnkTable& table, const WeightVector& w, std::uint64_t n, int k);

/// v_ell(n, k) = sum_{j <= n} w_{j*ell} d(j, k). Requires w length >= n*ell.
BigInt vl_nk(const CoefficientSequence& a, const WeightVector& w, std::uint64_t ell,
             std::uint64_t n, int k);
BigInt vl_nk(const DnkTable& table, const WeightVector& w, std::uint64_t ell,
             std::uint64_t n, int k);

/// Unit-case v(n, k) as a lattice-point count: ordered k-tuples of integers
/// >= 2 with product <= n, counted by recursive descent. n capped at 5000.
std::int64_t vnk_lattice(std::uint64_t n, int k);

struct VnkOptions {
  /// Retain every k level (needed for the cache format and for value(m, k)
  /// queries). When false the DP runs in place over a single O(sqrt n)
  /// array and only the top row v(n, .) is kept.
  bool keep_levels = true;
  /// Parallelize within a level (snapshot mode only).
  bool parallel = true;
};

/// Exact table of v(m, k) over the floor-value set of n for the unit case
/// (a = w = 1), built level by level in k by the split-summation recursion.
/// Values are held in 64-bit storage and promoted to arbitrary-width
/// integers if any entry overflows; they never wrap.
class VnkTable {
 public:
  std::uint64_t n() const { return n_; }
  int r() const { return r_; }
  const FloorValueSet& floor_values() const { return fvs_; }
  bool has_full_levels() const { return full_; }
  /// True when 64-bit storage is in effect.
  bool narrow() const { return narrow_; }

  /// v(m, k) for m in the floor-value set; zero when k > floor_log2(m).
  /// Tables without full levels answer only m == n.
  BigInt value(std::uint64_t m, int k) const;
  /// v(n, k) for 0 <= k <= r.
  BigInt top(int k) const;
  /// v(n, 1..r).
  std::vector<BigInt> top_row() const;

  /// Line-oriented cache format: header "vnk-cache v1 n=<decimal>", then one
  /// "<m> <k> <value>" line per entry, sorted by (k, m). Exact round-trip.
  void save(std::ostream& os) const;
  void save_file(const std::string& path) const;  // atomic: temp + rename
  static VnkTable load(std::istream& is);
  static VnkTable load_file(const std::string& path);

 private:
  friend VnkTable vnk_fast(std::uint64_t, const VnkOptions&);
  explicit VnkTable(std::uint64_t n);

  std::uint64_t n_;
  int r_;
  FloorValueSet fvs_;
  bool narrow_ = true;
  bool full_ = true;
  std::vector<std::vector<std::int64_t>> narrow_levels_;  // [k][slot]
  std::vector<std::vector<BigInt>> wide_levels_;
  std::vector<BigInt> top_;  // v(n, k), k = 0..r
};

/// Compute the unit-case v table for n via the floor-division recursion.
VnkTable vnk_fast(std::uint64_t n, const VnkOptions& opt = {});

}  // namespace dirmat
