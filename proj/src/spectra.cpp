#include "dirmat/spectra.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "dirmat/dirichlet.hpp"

namespace dirmat {

namespace {

std::string bf_str(const BigFloat& x) { return x.str(0, std::ios_base::scientific); }

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::string sci9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9e", x);
  return buf;
}

}  // namespace

ShiftedCharPoly::ShiftedCharPoly(std::uint64_t n, std::vector<BigInt> v_values)
    : n_(n), r_(floor_log2(n)), v_(std::move(v_values)) {
  if (v_.size() != static_cast<std::size_t>(r_))
    throw InputError("shifted_charpoly: expected v(n,1..r) with r = floor_log2(n)");
}

ShiftedCharPoly ShiftedCharPoly::from_table(const VnkTable& table) {
  return ShiftedCharPoly(table.n(), table.top_row());
}

IntegerPolynomial ShiftedCharPoly::shifted_polynomial() const {
  std::vector<BigInt> c(static_cast<std::size_t>(r_) + 2, BigInt(0));
  c[static_cast<std::size_t>(r_) + 1] = 1;
  for (int k = 1; k <= r_; ++k)
    c[static_cast<std::size_t>(r_ - k)] = -v_[static_cast<std::size_t>(k - 1)];
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial ShiftedCharPoly::expanded() const {
  if (n_ > 65536)
    throw CapError("shifted charpoly expansion is limited to n <= 65536");
  // p_n(x) = (x-1)^{n-r-1} * q(x-1)
  IntegerPolynomial q_shifted = shifted_polynomial().taylor_shift(BigInt(-1));
  const auto m = static_cast<std::size_t>(n_ - static_cast<std::uint64_t>(r_) - 1);
  return binomial_power(BigInt(-1), m) * q_shifted;
}

ShiftedCharPoly shifted_charpoly(std::uint64_t n, std::vector<BigInt> v_values) {
  return ShiftedCharPoly(n, std::move(v_values));
}

ShiftedCharPoly shifted_charpoly(const VnkTable& table) {
  return ShiftedCharPoly::from_table(table);
}

BigInt det_from_vnk(std::uint64_t n, std::span<const BigInt> v_1_to_r) {
  const int r = floor_log2(n);
  if (v_1_to_r.size() < static_cast<std::size_t>(r))
    throw InputError("det_from_vnk: expected v(n,1..r)");
  BigInt acc(1);  // k = 0 term, v(n,0) = 1
  for (int k = 1; k <= r; ++k) {
    const BigInt& v = v_1_to_r[static_cast<std::size_t>(k - 1)];
    if (k % 2 == 1)
      acc -= v;
    else
      acc += v;
  }
  return acc;
}

BigInt det_from_vnk(const VnkTable& table) {
  auto row = table.top_row();
  return det_from_vnk(table.n(), row);
}

BigInt det_weighted(const CoefficientSequence& a, const WeightVector& w, std::size_t n,
                    AVariant variant) {
  if (a.length() < n || w.length() < n)
    throw InputError("det_weighted: sequences shorter than n");
  if (w.mode() != ScalarMode::ExactInt)
    throw InputError("det_weighted: exact mode requires exact-integer weights");
  BigInt acc(0);
  if (variant == AVariant::A) {
    const CoefficientSequence b = dirichlet_inverse(a);
    for (std::size_t k = 1; k <= n; ++k) acc += w.int_at(k) * b.at(k);
  } else {
    for (std::size_t k = 1; k <= n; ++k) acc += w.int_at(k) * a.at(k);
  }
  return acc;
}

std::complex<double> det_weighted_complex(const CoefficientSequence& a,
                                          const WeightVector& w, std::size_t n,
                                          AVariant variant) {
  if (a.length() < n || w.length() < n)
    throw InputError("det_weighted: sequences shorter than n");
  const CoefficientSequence* series = &a;
  CoefficientSequence inv = CoefficientSequence::identity(1);
  if (variant == AVariant::A) {
    inv = dirichlet_inverse(a);
    series = &inv;
  }
  std::complex<double> sum(0.0, 0.0), carry(0.0, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    std::complex<double> term =
        w.complex_at(k) * series->at(k).convert_to<double>();
    std::complex<double> y = term - carry;
    std::complex<double> t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

SpectrumReport classify_spectrum(std::uint64_t n, const RootSolveResult& solve) {
  if (n < 2) throw InputError("classify_spectrum: n must be >= 2");
  PrecisionGuard guard(solve.precision_bits ? solve.precision_bits : 192);

  SpectrumReport rep;
  rep.n = n;
  rep.r = floor_log2(n);
  rep.precision_bits = solve.precision_bits;
  rep.trivial_multiplicity = BigInt(n) - rep.r - 1;
  rep.min_separation = solve.min_separation;
  rep.separation_ok = solve.separation_ok;
  rep.all_converged = solve.all_converged;

  const BigFloat real_tol =
      ldexp(BigFloat(1), -static_cast<int>(solve.precision_bits) / 2);

  rep.roots.reserve(solve.roots.size());
  std::vector<std::size_t> real_idx;
  for (std::size_t i = 0; i < solve.roots.size(); ++i) {
    SpectrumRoot root;
    root.lambda = solve.roots[i].y + BigComplex(BigFloat(1));
    root.certificate = solve.roots[i].certificate;
    root.converged = solve.roots[i].converged;
    rep.roots.push_back(std::move(root));
    const BigComplex& lam = rep.roots.back().lambda;
    if (abs(lam.im) <= real_tol * (BigFloat(1) + abs(lam))) real_idx.push_back(i);
  }
  if (real_idx.size() < 2)
    throw StructureError(
        "classify_spectrum: expected two large real eigenvalues, found fewer");

  std::size_t plus = real_idx[0], minus = real_idx[0];
  for (std::size_t i : real_idx) {
    if (rep.roots[i].lambda.re > rep.roots[plus].lambda.re) plus = i;
    if (rep.roots[i].lambda.re < rep.roots[minus].lambda.re) minus = i;
  }
  rep.roots[plus].large = true;
  rep.roots[minus].large = true;
  rep.lambda_plus = rep.roots[plus].lambda.re;
  rep.lambda_minus = rep.roots[minus].lambda.re;

  const BigFloat root_n = sqrt(BigFloat(n));
  const BigFloat base = log(root_n) + euler_gamma() - BigFloat(0.5);
  rep.delta_plus = BigFloat(rep.lambda_plus - root_n - base).convert_to<double>();
  rep.delta_minus = BigFloat(rep.lambda_minus + root_n - base).convert_to<double>();

  double max_abs = 0.0, max_re = 0.0;
  for (std::size_t i = 0; i < rep.roots.size(); ++i) {
    if (i == plus || i == minus) continue;
    rep.has_small = true;
    max_abs = std::max(max_abs, abs(rep.roots[i].lambda).convert_to<double>());
    max_re = std::max(max_re, rep.roots[i].lambda.re.convert_to<double>());
  }
  rep.max_abs_small = rep.has_small ? max_abs : std::nan("");
  rep.max_re_small = rep.has_small ? max_re : std::nan("");
  return rep;
}

void emit_spectrum_csv(const SpectrumReport& r, std::ostream& os) {
  os << "key,value\n";
  os << "format,spectrum-report\n";
  os << "version,1\n";
  os << "n," << r.n << "\n";
  os << "r," << r.r << "\n";
  os << "precision_bits," << r.precision_bits << "\n";
  os << "trivial_multiplicity," << r.trivial_multiplicity.str() << "\n";
  os << "all_converged," << (r.all_converged ? 1 : 0) << "\n";
  os << "separation_ok," << (r.separation_ok ? 1 : 0) << "\n";
  os << "min_separation," << bf_str(r.min_separation) << "\n";
  os << "lambda_plus," << bf_str(r.lambda_plus) << "\n";
  os << "lambda_minus," << bf_str(r.lambda_minus) << "\n";
  os << "delta_plus," << sci9(r.delta_plus) << "\n";
  os << "delta_minus," << sci9(r.delta_minus) << "\n";
  os << "max_abs_small," << (r.has_small ? fixed6(r.max_abs_small) : "") << "\n";
  os << "max_re_small," << (r.has_small ? fixed6(r.max_re_small) : "") << "\n";
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    os << "root_" << i << "_re," << bf_str(r.roots[i].lambda.re) << "\n";
    os << "root_" << i << "_im," << bf_str(r.roots[i].lambda.im) << "\n";
    os << "root_" << i << "_certificate," << bf_str(r.roots[i].certificate) << "\n";
    os << "root_" << i << "_converged," << (r.roots[i].converged ? 1 : 0) << "\n";
    os << "root_" << i << "_large," << (r.roots[i].large ? 1 : 0) << "\n";
  }
}

void emit_spectrum_jsonl(const SpectrumReport& r, std::ostream& os) {
  using json = nlohmann::json;
  json meta{{"record", "meta"},
            {"format", "spectrum-report"},
            {"version", 1},
            {"n", std::to_string(r.n)},
            {"r", r.r},
            {"precision_bits", r.precision_bits},
            {"trivial_multiplicity", r.trivial_multiplicity.str()}};
  os << meta.dump() << "\n";
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    json root{{"record", "root"},
              {"index", i},
              {"re", bf_str(r.roots[i].lambda.re)},
              {"im", bf_str(r.roots[i].lambda.im)},
              {"certificate", bf_str(r.roots[i].certificate)},
              {"converged", r.roots[i].converged},
              {"large", r.roots[i].large}};
    os << root.dump() << "\n";
  }
  json summary{{"record", "summary"},
               {"lambda_plus", bf_str(r.lambda_plus)},
               {"lambda_minus", bf_str(r.lambda_minus)},
               {"delta_plus", r.delta_plus},
               {"delta_minus", r.delta_minus},
               {"min_separation", bf_str(r.min_separation)},
               {"separation_ok", r.separation_ok},
               {"all_converged", r.all_converged}};
  if (r.has_small) {
    summary["max_abs_small"] = r.max_abs_small;
    summary["max_re_small"] = r.max_re_small;
  } else {
    summary["max_abs_small"] = nullptr;
    summary["max_re_small"] = nullptr;
  }
  os << summary.dump() << "\n";
}

namespace {

void check_nontrivial(const BigComplex& lambda) {
  const BigComplex shifted = lambda - BigComplex(BigFloat(1));
  if (abs(shifted) <= BigFloat(1e-12) * (BigFloat(1) + abs(lambda)))
    throw InputError("eigenvector: lambda = 1 is the trivial eigenvalue");
}

double geometric_condition(const BigComplex& inv_shift, int r) {
  const double q = abs(inv_shift).convert_to<double>();
  double acc = 1.0, pw = 1.0;
  for (int k = 1; k <= r; ++k) {
    pw *= q;
    acc += pw;
  }
  return acc;
}

std::vector<std::complex<double>> to_double_vec(const std::vector<BigComplex>& v) {
  std::vector<std::complex<double>> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_double();
  return out;
}

}  // namespace

EigvecReport eigenvector_right(const CoefficientSequence& a, const WeightVector& w,
                               std::uint64_t n, const BigComplex& lambda,
                               const EigvecOptions& opt) {
  if (n == 0) throw InputError("eigenvector_right: n must be positive");
  if (a.length() < n || w.length() < n)
    throw InputError("eigenvector_right: sequences shorter than n");
  if (w.mode() != ScalarMode::ExactInt)
    throw InputError("eigenvector_right: exact-integer weights required");
  check_nontrivial(lambda);

  PrecisionGuard guard(opt.precision_bits);
  EigvecReport rep;
  rep.lambda = {at_working_precision(lambda.re), at_working_precision(lambda.im)};

  const int r = floor_log2(n);
  const DnkTable table = d_table(a, n, r);
  const BigComplex shift = rep.lambda - BigComplex(BigFloat(1));
  const BigComplex inv = reciprocal(shift);

  rep.entries.resize(n);
  rep.entries[0] = shift;
  for (std::uint64_t j = 2; j <= n; ++j) {
    const std::uint64_t q = n / j;
    BigComplex acc, power(BigFloat(1));
    const int k_hi = floor_log2(q);
    for (int k = 0; k <= k_hi; ++k) {
      const BigInt v = vl_nk(table, w, j, q, k);
      if (v != 0) acc += BigFloat(v) * power;
      power = power * inv;
    }
    rep.entries[j - 1] = acc;
  }
  rep.condition = geometric_condition(inv, r);

  if (opt.verify && n <= opt.dense_cap) {
    const DenseMatrix dense = build_A(a, w, n, AVariant::A);
    rep.residual = eig_residual(dense, rep.lambda.to_double(), to_double_vec(rep.entries),
                                EigSide::Right);
    rep.verified = true;
    rep.ok = rep.residual <= opt.tolerance;
  }
  return rep;
}

EigvecReport eigenvector_left(const CoefficientSequence& a, std::uint64_t n,
                              const BigComplex& lambda, const WeightVector* verify_w,
                              const EigvecOptions& opt) {
  if (n == 0) throw InputError("eigenvector_left: n must be positive");
  if (a.length() < n) throw InputError("eigenvector_left: coefficients shorter than n");
  check_nontrivial(lambda);

  PrecisionGuard guard(opt.precision_bits);
  EigvecReport rep;
  rep.lambda = {at_working_precision(lambda.re), at_working_precision(lambda.im)};

  const int r = floor_log2(n);
  const DnkTable table = d_table(a, n, r);
  const BigComplex inv = reciprocal(rep.lambda - BigComplex(BigFloat(1)));

  rep.entries.resize(n);
  for (std::uint64_t q = 1; q <= n; ++q) {
    BigComplex acc, power(BigFloat(1));
    const int k_hi = floor_log2(q);
    for (int k = 0; k <= k_hi; ++k) {
      const BigInt& d = table.at(q, k);
      if (d != 0) acc += BigFloat(d) * power;
      power = power * inv;
    }
    rep.entries[q - 1] = acc;
  }
  rep.condition = geometric_condition(inv, r);

  if (verify_w != nullptr && opt.verify && n <= opt.dense_cap) {
    const DenseMatrix dense = build_A(a, *verify_w, n, AVariant::A);
    rep.residual = eig_residual(dense, rep.lambda.to_double(), to_double_vec(rep.entries),
                                EigSide::Left);
    rep.verified = true;
    rep.ok = rep.residual <= opt.tolerance;
  }
  return rep;
}

}  // namespace dirmat
