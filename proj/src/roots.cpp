#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "dirmat/spectra.hpp"

namespace dirmat {

namespace {

constexpr int kIterationCap = 200;

// Parlett-Reinsch balancing (diagonal similarity by powers of two). Eigen's
// Schur path does not balance, and the shifted-polynomial coefficients span
// many orders of magnitude.
void balance(Eigen::MatrixXd& m) {
  const auto n = m.rows();
  bool again = true;
  while (again) {
    again = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double col = 0.0, row = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(m(j, i));
        row += std::abs(m(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      const double total = col + row;
      double factor = 1.0;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        factor *= 2.0;
      }
      while (col >= row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        factor /= 2.0;
      }
      if (col + row < 0.95 * total && factor != 1.0) {
        again = true;
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) /= factor;
        for (Eigen::Index j = 0; j < n; ++j) m(j, i) *= factor;
      }
    }
  }
}

// Double-precision companion eigenvalues of the monic polynomial with
// ascending exact coefficients c[0..d] (c[d] = 1).
std::vector<std::complex<double>> companion_seeds(const std::vector<BigInt>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i)
    comp(i, d - 1) = -c[static_cast<std::size_t>(i)].convert_to<double>();
  balance(comp);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> seeds(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) seeds[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return seeds;
}

// q(z) and q'(z) in one Horner pass over exact coefficients held at working
// precision.
void horner2(const std::vector<BigComplex>& cf, const BigComplex& z, BigComplex& q,
             BigComplex& dq) {
  q = cf.back();
  dq = BigComplex();
  for (std::size_t i = cf.size() - 1; i-- > 0;) {
    dq = dq * z + q;
    q = q * z + cf[i];
  }
}

}  // namespace

RootSolveResult solve_roots(const ShiftedCharPoly& poly, unsigned precision_bits) {
  if (precision_bits < 64) throw InputError("solve_roots: precision must be >= 64 bits");
  PrecisionGuard guard(precision_bits);

  const IntegerPolynomial q_int = poly.shifted_polynomial();
  const auto& coeffs = q_int.coefficients();
  const int degree = q_int.degree();

  RootSolveResult result;
  result.precision_bits = precision_bits;
  result.min_separation = BigFloat(0);
  if (degree <= 0) return result;

  std::vector<BigComplex> cf(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) cf[i] = BigComplex(BigFloat(coeffs[i]));

  const BigFloat eps_step = ldexp(BigFloat(1), -static_cast<int>(precision_bits) + 6);
  const BigFloat tiny = ldexp(BigFloat(1), -2 * static_cast<int>(precision_bits));

  std::vector<BigComplex> z(static_cast<std::size_t>(degree));
  {
    auto seeds = companion_seeds(coeffs);
    double scale = 1.0;
    for (const auto& s : seeds) scale = std::max(scale, std::abs(s));
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::complex<double> s = seeds[i];
      if (!std::isfinite(s.real()) || !std::isfinite(s.imag()) || s == 0.0) {
        const double angle =
            6.283185307179586 * (static_cast<double>(i) + 0.25) / static_cast<double>(degree);
        s = std::polar(scale, angle);
      }
      z[i] = BigComplex(s);
    }
    // Coincident seeds repel badly; separate them deterministically.
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (abs(z[i] - z[j]) < BigFloat(1e-9) * BigFloat(scale))
          z[i].re += BigFloat(1e-6) * BigFloat(scale) * BigFloat(static_cast<unsigned>(i + 1));
  }

  std::vector<bool> settled(z.size(), false);
  std::vector<int> iterations(z.size(), 0);

  // Aberth-Ehrlich sweeps: simultaneous Newton steps with pairwise repulsion.
  for (int sweep = 0; sweep < kIterationCap; ++sweep) {
    bool any_active = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (settled[i]) continue;
      any_active = true;
      ++iterations[i];
      BigComplex q, dq;
      horner2(cf, z[i], q, dq);
      if (norm2(q) == 0) {
        settled[i] = true;
        continue;
      }
      if (norm2(dq) == 0) {
        z[i].re += eps_step + abs(z[i]) * eps_step;
        continue;
      }
      BigComplex w = q / dq;
      BigComplex repulsion;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        repulsion += reciprocal(z[i] - z[j]);
      }
      BigComplex denom = BigComplex(BigFloat(1)) - w * repulsion;
      BigComplex step = (norm2(denom) == 0) ? w : w / denom;
      z[i] -= step;
      if (abs(step) <= eps_step * abs(z[i]) + tiny) settled[i] = true;
    }
    if (!any_active) break;
  }

  // Per-root Newton polish against the exact coefficients.
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (int it = 0; it < 32 && iterations[i] < kIterationCap; ++it) {
      ++iterations[i];
      BigComplex q, dq;
      horner2(cf, z[i], q, dq);
      if (norm2(q) == 0 || norm2(dq) == 0) break;
      BigComplex step = q / dq;
      z[i] -= step;
      if (abs(step) <= eps_step * abs(z[i]) + tiny) break;
    }
  }

  const BigFloat cert_tol = ldexp(BigFloat(1), -static_cast<int>(precision_bits) / 2);
  result.roots.resize(z.size());
  result.all_converged = true;
  for (std::size_t i = 0; i < z.size(); ++i) {
    BigComplex q, dq;
    horner2(cf, z[i], q, dq);
    BigFloat scale = abs(dq) * std::max(abs(z[i]), BigFloat(1));
    BigFloat cert = (scale == 0) ? abs(q) : BigFloat(abs(q) / scale);
    result.roots[i].y = z[i];
    result.roots[i].certificate = cert;
    result.roots[i].iterations = iterations[i];
    result.roots[i].converged = cert <= cert_tol;
    result.all_converged = result.all_converged && result.roots[i].converged;
  }

  std::sort(result.roots.begin(), result.roots.end(),
            [](const RootEstimate& a, const RootEstimate& b) {
              if (a.y.re != b.y.re) return a.y.re < b.y.re;
              return a.y.im < b.y.im;
            });

  BigFloat max_mag(0);
  bool first = true;
  for (std::size_t i = 0; i < result.roots.size(); ++i) {
    max_mag = std::max(max_mag, abs(result.roots[i].y));
    for (std::size_t j = 0; j < i; ++j) {
      BigFloat sep = abs(result.roots[i].y - result.roots[j].y);
      if (first || sep < result.min_separation) {
        result.min_separation = sep;
        first = false;
      }
    }
  }
  if (!first)
    result.separation_ok =
        result.min_separation > cert_tol * std::max(BigFloat(1), max_mag);
  return result;
}

}  // namespace dirmat
