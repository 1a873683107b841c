#pragma once

#include <cstdint>
#include <limits>
#include <type_traits>

#include "dirmat/numeric.hpp"

namespace dirmat::detail {

/// acc += term. The int64 instantiation reports overflow instead of wrapping;
/// exact integers always succeed.
template <typename I>
inline bool acc_add(I& acc, const I& term) {
  if constexpr (std::is_same_v<I, std::int64_t>) {
    return !__builtin_add_overflow(acc, term, &acc);
  } else {
    acc += term;
    return true;
  }
}

/// acc += count * v, with the same overflow contract.
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

}  // namespace dirmat::detail
