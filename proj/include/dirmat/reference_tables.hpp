#pragma once

#include <cstdint>
#include <span>

namespace dirmat::reference {

/// One published column of v(n, k) values, k = 1..values.size().
struct VnkColumn {
  std::uint64_t n;
  std::span<const std::uint64_t> values;
};

/// Published v(n, k) columns for n = 10^6, 2^28, and 2^36. The 2^28 column
/// is the extended reproduction target and the 2^36 column the heroic one.
std::span<const VnkColumn> vnk_columns();

/// The column for a specific n, or nullptr when n is not covered.
const VnkColumn* vnk_column(std::uint64_t n);

/// One published row of the small-eigenvalue summary table.
struct EigRow {
  std::uint64_t n;
  double max_abs;
  double max_re;
};

/// Published max|lambda| / max Re(lambda) rows for n = 10^6 and n = 2^28..2^36.
std::span<const EigRow> eigentable();

const EigRow* eigentable_row(std::uint64_t n);

}  // namespace dirmat::reference
