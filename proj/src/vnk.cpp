#include "dirmat/vnk.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <type_traits>

namespace dirmat {

FloorValueSet::FloorValueSet(std::uint64_t n) : n_(n) {
  if (n == 0) throw InputError("floor_value_set: n must be positive");
  sqrt_n_ = isqrt(n);
  small_count_ = n / (sqrt_n_ + 1);
  values_.reserve(small_count_ + sqrt_n_);
  for (std::uint64_t m = 1; m <= small_count_; ++m) values_.push_back(m);
  for (std::uint64_t i = sqrt_n_; i >= 1; --i) values_.push_back(n / i);
}

std::size_t FloorValueSet::slot_unchecked(std::uint64_t m) const {
  if (m <= small_count_) return static_cast<std::size_t>(m - 1);
  return values_.size() - static_cast<std::size_t>(n_ / m);
}

bool FloorValueSet::contains(std::uint64_t m) const {
  if (m == 0 || m > n_) return false;
  return values_[slot_unchecked(m)] == m;
}

std::size_t FloorValueSet::slot_of(std::uint64_t m) const {
  if (m == 0 || m > n_) throw InputError("floor_value_set: value not in set");
  std::size_t s = slot_unchecked(m);
  if (values_[s] != m) throw InputError("floor_value_set: value not in set");
  return s;
}

std::uint64_t split_point(std::uint64_t n) {
  if (n == 0) throw InputError("split_point: n must be positive");
  const std::uint64_t sq = isqrt(n);
  const std::uint64_t s = n / (sq + 1);
  const std::uint64_t expected = (n - sq * sq >= sq) ? sq : sq - 1;
  if (s != expected)
    throw StructureError("split_point: two-case characterization violated");
  return s;
}

BigInt vnk_naive(const DnkTable& table, const WeightVector& w, std::uint64_t n, int k) {
  if (n == 0) throw InputError("vnk_naive: n must be positive");
  if (k < 0) throw InputError("vnk_naive: k must be non-negative");
  if (table.n_max() < n || table.k_max() < k)
    throw InputError("vnk_naive: d-table does not cover the request");
  if (w.length() < n) throw InputError("vnk_naive: weight vector too short");
  BigInt acc(0);
  for (std::uint64_t j = 1; j <= n; ++j) {
    const BigInt& d = table.at(j, k);
    if (d == 0) continue;
    acc += w.int_at(j) * d;
  }
  return acc;
}

BigInt vnk_naive(const CoefficientSequence& a, const WeightVector& w, std::uint64_t n,
                 int k) {
  if (n > kVnkNaiveCap)
    throw CapError("vnk_naive: n exceeds the definitional-route cap of 1e5");
  if (n == 0) throw InputError("vnk_naive: n must be positive");
  if (k < 0) throw InputError("vnk_naive: k must be non-negative");
  if (a.length() < n) throw InputError("vnk_naive: coefficient sequence too short");
  return vnk_naive(d_table(a, n, k), w, n, k);
}

BigInt vl_nk(const DnkTable& table, const WeightVector& w, std::uint64_t ell,
             std::uint64_t n, int k) {
  if (ell == 0) throw InputError("vl_nk: ell must be positive");
  if (n == 0) throw InputError("vl_nk: n must be positive");
  if (k < 0) throw InputError("vl_nk: k must be non-negative");
  if (w.length() < n * ell) throw InputError("vl_nk: weight vector too short");
  if (table.n_max() < n || table.k_max() < k)
    throw InputError("vl_nk: d-table does not cover the request");
  BigInt acc(0);
  for (std::uint64_t j = 1; j <= n; ++j) {
    const BigInt& d = table.at(j, k);
    if (d == 0) continue;
    acc += w.int_at(j * ell) * d;
  }
  return acc;
}

BigInt vl_nk(const CoefficientSequence& a, const WeightVector& w, std::uint64_t ell,
             std::uint64_t n, int k) {
  if (n > kVnkNaiveCap)
    throw CapError("vl_nk: n exceeds the definitional-route cap of 1e5");
  if (n == 0) throw InputError("vl_nk: n must be positive");
  if (k < 0) throw InputError("vl_nk: k must be non-negative");
  if (a.length() < n) throw InputError("vl_nk: coefficient sequence too short");
  return vl_nk(d_table(a, n, k), w, ell, n, k);
}

namespace {

std::int64_t lattice_count(std::uint64_t n, int k) {
  if (k == 0) return 1;  // the empty product
  if (k >= 64 || n < (std::uint64_t{1} << k)) return 0;
  if (k == 1) return static_cast<std::int64_t>(n - 1);  // singletons 2..n
  std::int64_t total = 0;
  const std::uint64_t l_max = n >> (k - 1);  // beyond this the remaining count is 0
  for (std::uint64_t l = 2; l <= l_max; ++l) total += lattice_count(n / l, k - 1);
  return total;
}

}  // namespace

std::int64_t vnk_lattice(std::uint64_t n, int k) {
  if (n == 0) throw InputError("vnk_lattice: n must be positive");
  if (k < 0) throw InputError("vnk_lattice: k must be non-negative");
  if (n > kVnkLatticeCap)
    throw CapError("vnk_lattice: n exceeds the enumeration cap of 5000");
  return lattice_count(n, k);
}

// ---------------------------------------------------------------------------
// Fast table: level-by-level split summation over the floor-value set.
// ---------------------------------------------------------------------------

namespace {

struct OverflowSignal {};

template <typename I>
inline bool acc_add(I& acc, const I& term) {
  if constexpr (std::is_same_v<I, std::int64_t>) {
    return !__builtin_add_overflow(acc, term, &acc);
  } else {
    acc += term;
    return true;
  }
}

template <typename I>
inline bool acc_add_scaled(I& acc, std::uint64_t count, const I& v) {
  if constexpr (std::is_same_v<I, std::int64_t>) {
    if (count > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      return false;
    std::int64_t prod;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(count), v, &prod)) return false;
    return !__builtin_add_overflow(acc, prod, &acc);
  } else {
    acc += BigInt(count) * v;
    return true;
  }
}

// v(m, k) from level k-1 values:
//   v(m, k) = sum_{i=2}^{s} v(floor(m/i), k-1)
//           + sum_{j=2^{k-1}}^{floor(sqrt m)} (floor(m/j) - floor(m/(j+1))) v(j, k-1)
// with s = floor(m / (floor(sqrt m) + 1)). Every argument stays inside the
// floor-value set of n because floor(floor(n/a)/b) = floor(n/(ab)).
template <typename I>
bool value_from_prev(const FloorValueSet& fvs, const I* prev, std::uint64_t m, int k,
                     I& out) {
  const std::uint64_t sq = isqrt(m);
  const std::uint64_t s = m / (sq + 1);
  I acc{};
  const std::uint64_t i_hi = std::min(s, m >> (k - 1));
  for (std::uint64_t i = 2; i <= i_hi; ++i) {
    if (!acc_add(acc, prev[fvs.slot_of(m / i)])) return false;
  }
  const std::uint64_t j_lo = std::uint64_t{1} << (k - 1);
  for (std::uint64_t j = j_lo; j <= sq; ++j) {
    const std::uint64_t count = m / j - m / (j + 1);
    if (count == 0) continue;
    if (!acc_add_scaled(acc, count, prev[fvs.slot_of(j)])) return false;
  }
  out = acc;
  return true;
}

// Snapshot mode: read the retained previous level, write a fresh one.
// Per-slot work is independent, so the level parallelizes; sums are exact
// integers, so results do not depend on scheduling.
template <typename I>
void level_snapshot(const FloorValueSet& fvs, int k, const std::vector<I>& prev,
                    std::vector<I>& cur, bool parallel) {
  const auto size = static_cast<std::ptrdiff_t>(fvs.size());
  std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::ptrdiff_t slot = 0; slot < size; ++slot) {
    if (overflow.load(std::memory_order_relaxed)) continue;
    const std::uint64_t m = fvs.value_at(static_cast<std::size_t>(slot));
    if (k >= 64 || m < (std::uint64_t{1} << k)) {
      cur[static_cast<std::size_t>(slot)] = I{};
      continue;
    }
    if (!value_from_prev(fvs, prev.data(), m, k, cur[static_cast<std::size_t>(slot)]))
      overflow.store(true, std::memory_order_relaxed);
  }
  if (overflow.load()) throw OverflowSignal{};
}

// In-place mode: a single array, descending m. Every dependency of v(m, k)
// has a strictly smaller argument, so slots still hold level k-1 when read.
template <typename I>
void level_in_place(const FloorValueSet& fvs, int k, std::vector<I>& cur) {
  for (std::size_t slot = fvs.size(); slot-- > 0;) {
    const std::uint64_t m = fvs.value_at(slot);
    if (k >= 64 || m < (std::uint64_t{1} << k)) {
      cur[slot] = I{};
      continue;
    }
    I out{};
    if (!value_from_prev(fvs, cur.data(), m, k, out)) throw OverflowSignal{};
    cur[slot] = out;
  }
}

template <typename I>
void run_levels(const FloorValueSet& fvs, int r, const VnkOptions& opt,
                std::vector<std::vector<I>>& levels, std::vector<I>& tops) {
  const std::size_t size = fvs.size();
  tops.assign(static_cast<std::size_t>(r) + 1, I{});
  if (opt.keep_levels) {
    levels.assign(static_cast<std::size_t>(r) + 1, {});
    levels[0].assign(size, I{1});
    tops[0] = I{1};
    for (int k = 1; k <= r; ++k) {
      levels[static_cast<std::size_t>(k)].assign(size, I{});
      level_snapshot(fvs, k, levels[static_cast<std::size_t>(k - 1)],
                     levels[static_cast<std::size_t>(k)], opt.parallel);
      tops[static_cast<std::size_t>(k)] = levels[static_cast<std::size_t>(k)][size - 1];
    }
  } else {
    std::vector<I> cur(size, I{1});
    tops[0] = I{1};
    for (int k = 1; k <= r; ++k) {
      level_in_place(fvs, k, cur);
      tops[static_cast<std::size_t>(k)] = cur[size - 1];
    }
  }
}

bool fits_int64(const BigInt& v) {
  static const BigInt lo(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi(std::numeric_limits<std::int64_t>::max());
  return v >= lo && v <= hi;
}

}  // namespace

VnkTable::VnkTable(std::uint64_t n) : n_(n), r_(floor_log2(n)), fvs_(n) {}

VnkTable vnk_fast(std::uint64_t n, const VnkOptions& opt) {
  VnkTable t(n);
  t.full_ = opt.keep_levels;
  try {
    std::vector<std::int64_t> tops;
    run_levels<std::int64_t>(t.fvs_, t.r_, opt, t.narrow_levels_, tops);
    t.narrow_ = true;
    t.top_.assign(tops.begin(), tops.end());
  } catch (const OverflowSignal&) {
    // 64-bit arithmetic would wrap; redo the whole table in exact integers.
    t.narrow_levels_.clear();
    std::vector<BigInt> tops;
    run_levels<BigInt>(t.fvs_, t.r_, opt, t.wide_levels_, tops);
    t.narrow_ = false;
    t.top_ = std::move(tops);
  }
  return t;
}

BigInt VnkTable::value(std::uint64_t m, int k) const {
  if (k < 0) throw InputError("VnkTable: k must be non-negative");
  if (m == n_) return top(k);
  if (!full_)
    throw InputError("VnkTable: full levels were not retained for this table");
  const std::size_t slot = fvs_.slot_of(m);
  if (k > floor_log2(m)) return BigInt(0);
  return narrow_ ? BigInt(narrow_levels_[static_cast<std::size_t>(k)][slot])
                 : wide_levels_[static_cast<std::size_t>(k)][slot];
}

BigInt VnkTable::top(int k) const {
  if (k < 0) throw InputError("VnkTable: k must be non-negative");
  if (k > r_) return BigInt(0);
  return top_[static_cast<std::size_t>(k)];
}

std::vector<BigInt> VnkTable::top_row() const {
  std::vector<BigInt> row;
  row.reserve(static_cast<std::size_t>(r_));
  for (int k = 1; k <= r_; ++k) row.push_back(top(k));
  return row;
}

void VnkTable::save(std::ostream& os) const {
  if (!full_)
    throw InputError("VnkTable: cannot save a table without full levels");
  os << "vnk-cache v1 n=" << n_ << "\n";
  for (int k = 0; k <= r_; ++k) {
    for (std::size_t slot = 0; slot < fvs_.size(); ++slot) {
      const std::uint64_t m = fvs_.value_at(slot);
      if (floor_log2(m) < k) continue;
      os << m << ' ' << k << ' ';
      if (narrow_)
        os << narrow_levels_[static_cast<std::size_t>(k)][slot];
      else
        os << wide_levels_[static_cast<std::size_t>(k)][slot].str();
      os << '\n';
    }
  }
}

void VnkTable::save_file(const std::string& path) const {
  namespace fs = std::filesystem;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write cache file: " + tmp);
    save(out);
    if (!out) throw InputError("short write to cache file: " + tmp);
  }
  fs::rename(tmp, path);
}

VnkTable VnkTable::load(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw InputError("vnk cache: empty stream");
  std::uint64_t n = 0;
  {
    std::istringstream hs(header);
    std::string magic, version, nfield;
    hs >> magic >> version >> nfield;
    if (magic != "vnk-cache" || version != "v1" || nfield.rfind("n=", 0) != 0)
      throw InputError("vnk cache: bad header: " + header);
    try {
      n = std::stoull(nfield.substr(2));
    } catch (const std::exception&) {
      throw InputError("vnk cache: bad n field: " + header);
    }
  }
  VnkTable t(n);
  std::vector<std::vector<BigInt>> levels(static_cast<std::size_t>(t.r_) + 1,
                                          std::vector<BigInt>(t.fvs_.size(), BigInt(0)));
  bool narrow = true;
  std::string line;
  // Entries are required in exact (k, m) order; anything else is corrupt.
  for (int k = 0; k <= t.r_; ++k) {
    for (std::size_t slot = 0; slot < t.fvs_.size(); ++slot) {
      const std::uint64_t m = t.fvs_.value_at(slot);
      if (floor_log2(m) < k) continue;
      if (!std::getline(is, line)) throw InputError("vnk cache: truncated");
      std::istringstream ls(line);
      std::uint64_t lm = 0;
      int lk = -1;
      std::string value;
      if (!(ls >> lm >> lk >> value) || lm != m || lk != k)
        throw InputError("vnk cache: unexpected entry: " + line);
      BigInt v;
      try {
        v = BigInt(value);
      } catch (const std::exception&) {
        throw InputError("vnk cache: bad value: " + line);
      }
      narrow = narrow && fits_int64(v);
      levels[static_cast<std::size_t>(k)][slot] = std::move(v);
    }
  }
  if (std::getline(is, line) && !line.empty())
    throw InputError("vnk cache: trailing data: " + line);

  t.full_ = true;
  t.narrow_ = narrow;
  t.top_.resize(static_cast<std::size_t>(t.r_) + 1);
  for (int k = 0; k <= t.r_; ++k)
    t.top_[static_cast<std::size_t>(k)] = levels[static_cast<std::size_t>(k)].back();
  if (narrow) {
    t.narrow_levels_.assign(static_cast<std::size_t>(t.r_) + 1, {});
    for (int k = 0; k <= t.r_; ++k) {
      auto& dst = t.narrow_levels_[static_cast<std::size_t>(k)];
      dst.reserve(t.fvs_.size());
      for (const auto& v : levels[static_cast<std::size_t>(k)])
        dst.push_back(v.convert_to<std::int64_t>());
    }
  } else {
    t.wide_levels_ = std::move(levels);
  }
  return t;
}

VnkTable VnkTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open cache file: " + path);
  return load(in);
}

}  // namespace dirmat
