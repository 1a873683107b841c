#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dirmat/dense_matrix.hpp"
#include "dirmat/exact_oracle.hpp"
#include "dirmat/numeric.hpp"
#include "dirmat/sequences.hpp"
#include "dirmat/vnk.hpp"

namespace dirmat {

/// Characteristic polynomial of A_n in shifted form: with r = floor_log2(n),
///   p_n(x) = (x-1)^{n-r-1} * q(x-1),
///   q(y)   = y^{r+1} - sum_{k=1}^{r} v(n,k) y^{r-k},
/// held as the integer sequence v(n,1..r) plus the trivial-eigenvalue
/// multiplicity n-r-1. Never expanded to monomial basis at large n.
class ShiftedCharPoly {
 public:
  /// v_values[k-1] = v(n, k) for k = 1..r; throws if any value is missing.
  ShiftedCharPoly(std::uint64_t n, std::vector<BigInt> v_values);
  static ShiftedCharPoly from_table(const VnkTable& table);

  std::uint64_t n() const { return n_; }
  int r() const { return r_; }
  const std::vector<BigInt>& v_values() const { return v_; }
  BigInt trivial_multiplicity() const { return BigInt(n_) - r_ - 1; }

  /// q(y) as an integer polynomial of degree r+1; q(0) = -v(n, r).
  IntegerPolynomial shifted_polynomial() const;
  /// p_n(x) in monomial basis. Small n only (degree n); capped at 65536.
  IntegerPolynomial expanded() const;

 private:
  std::uint64_t n_;
  int r_;
  std::vector<BigInt> v_;
};

ShiftedCharPoly shifted_charpoly(std::uint64_t n, std::vector<BigInt> v_values);
ShiftedCharPoly shifted_charpoly(const VnkTable& table);

/// det C_n = sum_{k=0}^{r} (-1)^k v(n,k) with v(n,0) = 1 (the Mertens value
/// in the unit case).
BigInt det_from_vnk(std::uint64_t n, std::span<const BigInt> v_1_to_r);
BigInt det_from_vnk(const VnkTable& table);

/// det A_n = sum w_k b_k (variant A, b the formal inverse of a) or
/// det A~_n = sum w_k a_k (variant Atilde). Exact-integer weights.
BigInt det_weighted(const CoefficientSequence& a, const WeightVector& w, std::size_t n,
                    AVariant variant);
/// Same sums evaluated in complex double (e.g. w_k = k^{-s}), with one
/// compensated-summation pass. Accepts either weight mode.
std::complex<double> det_weighted_complex(const CoefficientSequence& a,
                                          const WeightVector& w, std::size_t n,
                                          AVariant variant);

struct RootEstimate {
  BigComplex y;          // root of the shifted polynomial q
  BigFloat certificate;  // |q(y)| / (|q'(y)| * max(|y|, 1))
  bool converged = false;
  int iterations = 0;
};

struct RootSolveResult {
  unsigned precision_bits = 0;
  std::vector<RootEstimate> roots;  // sorted by (re, im)
  BigFloat min_separation;
  bool separation_ok = true;
  bool all_converged = true;
};

/// All r+1 roots of q(y): Aberth-Ehrlich simultaneous iteration at the
/// requested precision, seeded from double-precision companion-matrix
/// eigenvalues, then per-root Newton polish evaluating the exact integer
/// coefficients at working precision. Unconverged roots are flagged, never
/// silent. precision_bits >= 64.
RootSolveResult solve_roots(const ShiftedCharPoly& poly, unsigned precision_bits = 192);

struct SpectrumRoot {
  BigComplex lambda;  // nontrivial eigenvalue 1 + y
  BigFloat certificate;
  bool converged = false;
  bool large = false;  // one of lambda_plus / lambda_minus
};

struct SpectrumReport {
  std::uint64_t n = 0;
  int r = 0;
  unsigned precision_bits = 0;
  BigInt trivial_multiplicity;
  std::vector<SpectrumRoot> roots;
  BigFloat lambda_plus;
  BigFloat lambda_minus;
  double delta_plus = 0.0;   // lambda_plus - (sqrt n + log sqrt n + gamma - 1/2)
  double delta_minus = 0.0;  // lambda_minus - (-sqrt n + log sqrt n + gamma - 1/2)
  bool has_small = false;
  double max_abs_small = 0.0;  // over small nontrivial eigenvalues
  double max_re_small = 0.0;
  BigFloat min_separation;
  bool separation_ok = true;
  bool all_converged = true;
};

/// Identify lambda_plus / lambda_minus as the extreme real roots, classify
/// the rest as small, and report summary statistics and asymptotic
/// deviations. Throws StructureError when fewer than two real roots exist.
SpectrumReport classify_spectrum(std::uint64_t n, const RootSolveResult& roots);

/// Serialization of a spectrum report (versioned record set). CSV emits
/// key,value rows; json-lines emits one record object per line.
void emit_spectrum_csv(const SpectrumReport& report, std::ostream& os);
void emit_spectrum_jsonl(const SpectrumReport& report, std::ostream& os);

struct EigvecOptions {
  bool verify = true;          // compute a dense residual when n <= dense_cap
  double tolerance = 1e-8;
  std::size_t dense_cap = 2048;
  unsigned precision_bits = 192;
};

struct EigvecReport {
  BigComplex lambda;
  std::vector<BigComplex> entries;
  bool verified = false;
  double residual = 0.0;   // relative 2-norm residual against the dense matrix
  double condition = 0.0;  // sum_k |lambda-1|^{-k}, the term amplification scale
  bool ok = false;         // verified && residual <= tolerance
};

/// Right eigenvector of A_n for a nontrivial eigenvalue:
/// u = [lambda-1, X_2(n/2), ..., X_n(1)] with
/// X_j(q) = sum_{k>=0} v_j(q,k) (lambda-1)^{-k} (a finite sum). The k = 0
/// term is v_j(q,0) = w_j. Rejects lambda = 1.
EigvecReport eigenvector_right(const CoefficientSequence& a, const WeightVector& w,
                               std::uint64_t n, const BigComplex& lambda,
                               const EigvecOptions& opt = {});

/// Transpose (left) eigenvector: v = [1, Y(2), ..., Y(n)] with
/// Y(q) = sum_{k>=0} d(q,k) (lambda-1)^{-k}. Entries are independent of the
/// weights; pass verify_w to verify the residual against W + D built from it.
EigvecReport eigenvector_left(const CoefficientSequence& a, std::uint64_t n,
                              const BigComplex& lambda,
                              const WeightVector* verify_w = nullptr,
                              const EigvecOptions& opt = {});

}  // namespace dirmat
