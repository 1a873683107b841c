#include "dirmat/exact_oracle.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace dirmat {

const BigInt IntegerPolynomial::kZero = BigInt(0);

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntegerPolynomial::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

BigInt IntegerPolynomial::evaluate(const BigInt& x) const {
  BigInt acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

BigComplex IntegerPolynomial::evaluate(const BigComplex& x) const {
  BigComplex acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + BigComplex(BigFloat(c_[i]));
  return acc;
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::taylor_shift(const BigInt& shift) const {
  // Horner over the shifted variable: p(x + s) built from the top coefficient down.
  IntegerPolynomial result;
  IntegerPolynomial x_plus_s(std::vector<BigInt>{shift, BigInt(1)});
  for (std::size_t i = c_.size(); i-- > 0;) {
    result = result * x_plus_s + IntegerPolynomial(std::vector<BigInt>{c_[i]});
  }
  return result;
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    if (first && c_[i] < 0) os << "-";
    BigInt mag = abs(c_[i]);
    if (mag != 1 || i == 0) os << mag.str();
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

IntegerPolynomial binomial_power(const BigInt& a, std::size_t m) {
  std::vector<BigInt> c(m + 1);
  BigInt binom(1);
  BigInt apow(1);
  // coefficient of x^{m-j} is C(m, j) * a^j
  std::vector<BigInt> rev(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    rev[j] = binom * apow;
    binom = binom * BigInt(m - j) / BigInt(j + 1);
    apow *= a;
  }
  for (std::size_t j = 0; j <= m; ++j) c[m - j] = rev[j];
  return IntegerPolynomial(std::move(c));
}

BigInt det_exact(const DenseMatrix& m) {
  if (m.mode() != ScalarMode::ExactInt)
    throw InputError("det_exact: matrix must be in exact mode");
  const std::size_t n = m.dim();
  std::vector<BigInt> w(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = m.int_at(i, j);

  int sign = 1;
  BigInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Row pivoting: any nonzero pivot keeps the elimination division-exact.
    std::size_t p = k;
    while (p < n && w[p * n + k] == 0) ++p;
    if (p == n) return BigInt(0);
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(w[p * n + j], w[k * n + j]);
      sign = -sign;
    }
    const BigInt& pivot = w[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w[i * n + j] = (w[i * n + j] * pivot - w[i * n + k] * w[k * n + j]) / prev;
      }
      w[i * n + k] = 0;
    }
    prev = pivot;
  }
  BigInt det = w[n * n - 1];
  return sign > 0 ? det : -det;
}

namespace {

// Exact polynomial interpolation through (nodes[i], values[i]) using Newton
// divided differences over the rationals; result must be integral.
IntegerPolynomial interpolate_integer(const std::vector<BigInt>& nodes,
                                      const std::vector<BigInt>& values) {
  const std::size_t m = nodes.size();
  std::vector<BigRat> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = BigRat(values[i]);
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / BigRat(nodes[i] - nodes[i - level]);

  // Horner over the Newton basis.
  std::vector<BigRat> poly;
  for (std::size_t i = m; i-- > 0;) {
    std::vector<BigRat> next(poly.size() + 1, BigRat(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * BigRat(nodes[i]);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  std::vector<BigInt> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (denominator(poly[i]) != 1)
      throw StructureError("charpoly interpolation produced a non-integer coefficient");
    out[i] = numerator(poly[i]);
  }
  return IntegerPolynomial(std::move(out));
}

}  // namespace

IntegerPolynomial charpoly_exact(const DenseMatrix& m) {
  if (m.mode() != ScalarMode::ExactInt)
    throw InputError("charpoly_exact: matrix must be in exact mode");
  const std::size_t n = m.dim();
  if (n > kCharpolyDimensionCap)
    throw CapError("charpoly_exact: dimension exceeds the enforced cap of 512");

  // Nodes 0, 1, -1, 2, -2, ... keep intermediate integers small.
  std::vector<BigInt> nodes(n + 1);
  for (std::size_t i = 0; i < n + 1; ++i) {
    long long v = static_cast<long long>((i + 1) / 2);
    nodes[i] = (i % 2 == 0) ? BigInt(-v) : BigInt(v);
  }
  std::vector<BigInt> values(n + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(n + 1); ++idx) {
    DenseMatrix shifted(n, ScalarMode::ExactInt);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        shifted.int_at(i, j) = -m.int_at(i, j);
        if (i == j) shifted.int_at(i, j) += nodes[static_cast<std::size_t>(idx)];
      }
    values[static_cast<std::size_t>(idx)] = det_exact(shifted);
  }
  IntegerPolynomial p = interpolate_integer(nodes, values);
  if (p.degree() != static_cast<int>(n) || p.coeff(n) != 1)
    throw StructureError("charpoly_exact: interpolant is not monic of degree n");
  return p;
}

double eig_residual(const DenseMatrix& m, std::complex<double> lambda,
                    std::span<const std::complex<double>> vec, EigSide side) {
  const std::size_t n = m.dim();
  if (vec.size() != n) throw InputError("eig_residual: vector length mismatch");
  bool nonzero = false;
  for (const auto& v : vec)
    if (v != 0.0) {
      nonzero = true;
      break;
    }
  if (!nonzero) throw InputError("eig_residual: vector must be nonzero");

  // One compensated-summation pass per dot product and per norm.
  auto kahan_add = [](std::complex<double>& sum, std::complex<double>& carry,
                      std::complex<double> term) {
    std::complex<double> y = term - carry;
    std::complex<double> t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  };

  double num2 = 0.0, num2c = 0.0, den2 = 0.0, den2c = 0.0;
  auto kahan_add_real = [](double& sum, double& carry, double term) {
    double y = term - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  };

  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> dot(0.0, 0.0), carry(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> entry =
          side == EigSide::Right ? m.as_complex(i, j) : m.as_complex(j, i);
      if (entry == 0.0) continue;
      kahan_add(dot, carry, entry * vec[j]);
    }
    std::complex<double> r = dot - lambda * vec[i];
    kahan_add_real(num2, num2c, std::norm(r));
    kahan_add_real(den2, den2c, std::norm(vec[i]));
  }
  return std::sqrt(num2) / std::sqrt(den2);
}

}  // namespace dirmat
