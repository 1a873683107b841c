#include "dirmat/numeric.hpp"

#include <cmath>

namespace dirmat {

namespace {

// 130 digits; parsed at whatever working precision is currently active.
constexpr const char* kEulerGamma =
    "0.5772156649015328606065120900824024310421593359399235988057672348848677"
    "2677766467093694706329174674951463144724980708248096050401448";

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

BigFloat euler_gamma() { return BigFloat(kEulerGamma); }

BigFloat at_working_precision(const BigFloat& x) {
  BigFloat y(x);
  y.precision(BigFloat::default_precision());
  return y;
}

}  // namespace dirmat
