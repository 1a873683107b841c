#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dirmat {

namespace mp = boost::multiprecision;

/// Exact arbitrary-width integers and rationals (GMP-backed).
using BigInt = mp::mpz_int;
using BigRat = mp::mpq_rational;

/// Configurable-precision real numbers (MPFR-backed, precision set at runtime).
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Invalid or out-of-contract input. CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds an enforced size cap. CLI maps this to exit code 2.
class CapError : public InputError {
 public:
  using InputError::InputError;
};

/// An iterative solve did not converge. CLI maps this to exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Computed results violate expected spectral structure. Exit code 3.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(bits * 0.3010299956639812) + 3;
}

/// Scoped override of the MPFR working precision (thread-local default).
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(BigFloat::default_precision()) {
    if (bits < 64) throw InputError("working precision must be at least 64 bits");
    BigFloat::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// Floor of sqrt(n), exact for the full uint64 range.
std::uint64_t isqrt(std::uint64_t n);

inline int floor_log2(std::uint64_t n) {
  if (n == 0) throw InputError("floor_log2: argument must be positive");
  return static_cast<int>(std::bit_width(n)) - 1;
}

/// Euler-Mascheroni constant at the current working precision (130 digits stored).
BigFloat euler_gamma();

/// Re-round a value to the current thread default precision.
BigFloat at_working_precision(const BigFloat& x);

/// Complex value over BigFloat. Covers just what the root solver and the
/// eigenvector sums need; precision follows the operands.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const BigFloat& r) : re(r), im(0) {}
  explicit BigComplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_double() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& z) {
    return {s * z.re, s * z.im};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
};

inline BigFloat norm2(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat abs(const BigComplex& z) { return sqrt(norm2(z)); }
inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigComplex reciprocal(const BigComplex& z) {
  BigFloat d = norm2(z);
  return {z.re / d, -z.im / d};
}

}  // namespace dirmat
