// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failed criteria. Tolerances are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dirmat/dirichlet.hpp"
#include "dirmat/exact_oracle.hpp"
#include "dirmat/reference_tables.hpp"
#include "dirmat/spectra.hpp"
#include "dirmat/vnk.hpp"

using namespace dirmat;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<BigInt> random_sequence(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<BigInt> v(n);
  v[0] = 1;
  for (std::size_t i = 1; i < n; ++i) v[i] = dist(rng);
  return v;
}

std::vector<BigInt> naive_v_row(const CoefficientSequence& a, const WeightVector& w,
                                std::uint64_t n) {
  const int r = floor_log2(n);
  auto dt = d_table(a, n, r);
  std::vector<BigInt> v(static_cast<std::size_t>(r));
  for (int k = 1; k <= r; ++k)
    v[static_cast<std::size_t>(k - 1)] = vnk_naive(dt, w, n, k);
  return v;
}

// --- criterion 1: published column n = 10^6, exact, <= 10 s -----------------
bool criterion1(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  auto table = vnk_fast(1000000);
  const double elapsed = seconds_since(start);
  const auto* col = reference::vnk_column(1000000);
  if (col == nullptr || table.r() != 19) {
    detail = "missing column or wrong r";
    return false;
  }
  for (std::size_t i = 0; i < col->values.size(); ++i)
    if (table.top(static_cast<int>(i) + 1) != BigInt(col->values[i])) {
      detail = "cell k=" + std::to_string(i + 1) + " differs";
      return false;
    }
  detail = "19/19 cells exact in " + std::to_string(elapsed) + " s";
  return elapsed <= 10.0;
}

// --- criterion 2: published column n = 2^28, exact, <= 30 min ---------------
bool criterion2(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  auto table = vnk_fast(268435456ull);
  const double elapsed = seconds_since(start);
  const auto* col = reference::vnk_column(268435456ull);
  if (col == nullptr || table.r() != 28) {
    detail = "missing column or wrong r";
    return false;
  }
  for (std::size_t i = 0; i < col->values.size(); ++i)
    if (table.top(static_cast<int>(i) + 1) != BigInt(col->values[i])) {
      detail = "cell k=" + std::to_string(i + 1) + " differs";
      return false;
    }
  detail = "28/28 cells exact in " + std::to_string(elapsed) + " s";
  return elapsed <= 1800.0;
}

// --- criterion 3: eigenvalue row n = 10^6 within 1e-4 -----------------------
bool criterion3(std::string& detail) {
  auto rep = classify_spectrum(1000000, solve_roots(shifted_charpoly(vnk_fast(1000000)), 192));
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max_abs=%.6f max_re=%.6f", rep.max_abs_small,
                rep.max_re_small);
  detail = buf;
  return rep.has_small && std::abs(rep.max_abs_small - 0.983108) <= 1e-4 &&
         std::abs(rep.max_re_small - 0.983108) <= 1e-4;
}

// --- criterion 4: oracle equivalence ----------------------------------------
bool criterion4(std::string& detail) {
  // fast = lattice = naive for every n <= 3000 and all 0 <= k <= log2(n)
  const std::uint64_t sweep = 3000;
  auto dt = d_table(CoefficientSequence::ones(sweep), sweep, floor_log2(sweep));
  auto unit_w = WeightVector::ones(sweep);
  std::vector<BigInt> prefix(static_cast<std::size_t>(floor_log2(sweep)) + 1, BigInt(0));
  prefix[0] = 0;
  for (std::uint64_t n = 1; n <= sweep; ++n) {
    for (int k = 0; k <= floor_log2(sweep); ++k) prefix[static_cast<std::size_t>(k)] += dt.at(n, k);
    auto table = vnk_fast(n, {.keep_levels = false});
    for (int k = 0; k <= floor_log2(n); ++k) {
      const BigInt fast = table.top(k);
      if (fast != vnk_lattice(n, k)) {
        detail = "fast != lattice at n=" + std::to_string(n) + " k=" + std::to_string(k);
        return false;
      }
      if (fast != prefix[static_cast<std::size_t>(k)]) {
        detail = "fast != naive at n=" + std::to_string(n) + " k=" + std::to_string(k);
        return false;
      }
    }
    // exercise the vnk_naive operation itself on a subsample
    if (n <= 64 || n % 97 == 0) {
      for (int k = 0; k <= floor_log2(n); ++k)
        if (table.top(k) != vnk_naive(dt, unit_w, n, k)) {
          detail = "vnk_naive mismatch at n=" + std::to_string(n);
          return false;
        }
    }
  }

  // shifted charpoly expanded == dense exact charpoly: unit n <= 64
  for (std::uint64_t n = 1; n <= 64; ++n) {
    auto dense = build_A(CoefficientSequence::ones(n), WeightVector::ones(n),
                         static_cast<std::size_t>(n), AVariant::A);
    if (!(shifted_charpoly(vnk_fast(n)).expanded() == charpoly_exact(dense))) {
      detail = "unit charpoly mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  // ... and 50 random integer (a, w) pairs at n <= 32
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 pick(4000 + static_cast<unsigned>(i));
    const std::uint64_t n = 2 + pick() % 31;  // 2..32
    auto a = CoefficientSequence(random_sequence(n, 5000 + static_cast<unsigned>(i)));
    auto w = WeightVector::from_integers(random_sequence(n, 6000 + static_cast<unsigned>(i)));
    auto poly = shifted_charpoly(n, naive_v_row(a, w, n));
    auto dense = build_A(a, w, static_cast<std::size_t>(n), AVariant::A);
    if (!(poly.expanded() == charpoly_exact(dense))) {
      detail = "random charpoly mismatch at instance " + std::to_string(i);
      return false;
    }
  }
  detail = "n<=3000 triple equality; unit n<=64 and 50 random charpolys exact";
  return true;
}

// --- criterion 5: determinant identities ------------------------------------
bool criterion5(std::string& detail) {
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 pick(9000 + static_cast<unsigned>(i));
    const std::size_t n = 2 + pick() % 127;  // 2..128
    auto a = CoefficientSequence(random_sequence(n, 9500 + static_cast<unsigned>(i)));
    auto w = WeightVector::from_integers(random_sequence(n, 9700 + static_cast<unsigned>(i)));
    for (auto variant : {AVariant::A, AVariant::Atilde}) {
      if (det_weighted(a, w, n, variant) != det_exact(build_A(a, w, n, variant))) {
        detail = "formula/dense mismatch at instance " + std::to_string(i);
        return false;
      }
    }
  }

  const std::uint64_t sweep = 100000;
  auto mu = mobius_sieve(sweep);
  auto dt = d_table(CoefficientSequence::ones(sweep), sweep, floor_log2(sweep));
  std::vector<BigInt> prefix(static_cast<std::size_t>(floor_log2(sweep)) + 1, BigInt(0));
  BigInt mertens(0);
  for (std::uint64_t n = 1; n <= sweep; ++n) {
    mertens += mu[n];
    for (int k = 0; k <= floor_log2(sweep); ++k) prefix[static_cast<std::size_t>(k)] += dt.at(n, k);
    std::span<const BigInt> row(prefix.data() + 1, static_cast<std::size_t>(floor_log2(n)));
    if (det_from_vnk(n, row) != mertens) {
      detail = "det_from_vnk != Mertens at n=" + std::to_string(n);
      return false;
    }
  }
  if (det_from_vnk(vnk_fast(1000000)) != 212) {
    detail = "M(10^6) != 212";
    return false;
  }
  detail = "100 dense instances exact; Mertens sweep to 1e5 and M(10^6)=212 exact";
  return true;
}

// --- criterion 6: eigenvector residuals and biorthogonality ------------------
bool criterion6(std::string& detail) {
  struct Instance {
    CoefficientSequence a;
    WeightVector w;
    std::uint64_t n;
  };
  std::vector<Instance> instances;
  instances.push_back({CoefficientSequence::ones(256), WeightVector::ones(256), 256});
  for (int i = 0; i < 20; ++i) {
    std::mt19937_64 pick(11000 + static_cast<unsigned>(i));
    const std::uint64_t n = 8 + pick() % 249;  // 8..256
    instances.push_back({CoefficientSequence(random_sequence(n, 12000 + static_cast<unsigned>(i))),
                         WeightVector::from_integers(random_sequence(n, 13000 + static_cast<unsigned>(i))),
                         n});
  }
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& inst = instances[idx];
    auto poly = inst.w.is_unit() && inst.a.values() == CoefficientSequence::ones(inst.n).values()
                    ? shifted_charpoly(vnk_fast(inst.n))
                    : shifted_charpoly(inst.n, naive_v_row(inst.a, inst.w, inst.n));
    auto res = solve_roots(poly, 192);
    if (!res.all_converged) {
      detail = "root solve did not converge on instance " + std::to_string(idx);
      return false;
    }
    std::vector<EigvecReport> rights, lefts;
    for (const auto& root : res.roots) {
      if (abs(root.y) < BigFloat(1e-9)) continue;  // coincides with the trivial eigenvalue
      BigComplex lambda = root.y + BigComplex(BigFloat(1));
      auto u = eigenvector_right(inst.a, inst.w, inst.n, lambda);
      auto v = eigenvector_left(inst.a, inst.n, lambda, &inst.w);
      if (!u.verified || u.residual > 1e-8 || !v.verified || v.residual > 1e-8) {
        detail = "residual above 1e-8 on instance " + std::to_string(idx);
        return false;
      }
      rights.push_back(std::move(u));
      lefts.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < rights.size(); ++i)
      for (std::size_t j = 0; j < lefts.size(); ++j) {
        if (i == j) continue;
        std::complex<double> dot(0.0, 0.0);
        double nu = 0.0, nv = 0.0;
        for (std::size_t t = 0; t < inst.n; ++t) {
          const auto ut = rights[i].entries[t].to_double();
          const auto vt = lefts[j].entries[t].to_double();
          dot += ut * vt;
          nu += std::norm(ut);
          nv += std::norm(vt);
        }
        if (std::abs(dot) / std::sqrt(nu * nv) > 1e-8) {
          detail = "biorthogonality above 1e-8 on instance " + std::to_string(idx);
          return false;
        }
      }
  }
  detail = "unit n=256 and 20 random instances: residuals and pairings within 1e-8";
  return true;
}

// --- criterion 7: asymptotic consistency of the large eigenvalues -----------
bool criterion7(std::string& detail) {
  for (std::uint64_t n : {10000ull, 100000ull, 1000000ull}) {
    auto rep = classify_spectrum(n, solve_roots(shifted_charpoly(vnk_fast(n)), 192));
    const double logn = std::log(static_cast<double>(n));
    const double bound = 5.0 * logn * logn / std::sqrt(static_cast<double>(n));
    if (std::abs(rep.delta_plus) > bound || std::abs(rep.delta_minus) > bound) {
      detail = "deviation above bound at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "deviations within 5 log^2(n)/sqrt(n) at n=1e4,1e5,1e6";
  return true;
}

// --- criterion 8: truncated Dirichlet-series determinant --------------------
bool criterion8(std::string& detail) {
  const std::size_t n = 2000;
  auto det = det_weighted_complex(CoefficientSequence::ones(n),
                                  WeightVector::dirichlet(n, {2.0, 0.0}), n, AVariant::A);
  auto mu = mobius_sieve(n);
  double direct = 0.0;
  for (std::size_t k = n; k >= 1; --k)
    direct += static_cast<double>(mu[k]) / (static_cast<double>(k) * k);
  const double six_over_pi2 = 6.0 / (M_PI * M_PI);
  char buf[160];
  std::snprintf(buf, sizeof(buf), "det=%.15f direct=%.15f 6/pi^2=%.15f", det.real(),
                direct, six_over_pi2);
  detail = buf;
  return std::abs(det.real() - direct) <= 1e-12 &&
         std::abs(det.imag()) <= 1e-12 &&
         std::abs(direct - six_over_pi2) <= 1e-3;
}

// --- criterion 9: heroic column integrity -----------------------------------
bool criterion9(std::string& detail) {
  // The n = 2^36 row is documented as a long-running reproduction, not a CI
  // run; its acceptance rests on the embedded column plus the same code path
  // being exact at the scales of criteria 1, 2, and 4.
  const auto* col = reference::vnk_column(68719476736ull);
  if (col == nullptr || col->values.size() != 36) {
    detail = "embedded 2^36 column missing or malformed";
    return false;
  }
  if (col->values.front() != 68719476735ull || col->values.back() != 1ull) {
    detail = "embedded 2^36 endpoints wrong";
    return false;
  }
  const auto* row = reference::eigentable_row(68719476736ull);
  if (row == nullptr || std::abs(row->max_abs - 1.031192) > 1e-9 ||
      std::abs(row->max_re - 1.000036) > 1e-9) {
    detail = "embedded 2^36 eigenvalue row missing or wrong";
    return false;
  }
  // The solver reproduces the counterexample row from the embedded column.
  std::vector<BigInt> v(col->values.begin(), col->values.end());
  auto rep = classify_spectrum(68719476736ull,
                               solve_roots(shifted_charpoly(68719476736ull, std::move(v)), 256));
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max_abs=%.6f max_re=%.6f from embedded column",
                rep.max_abs_small, rep.max_re_small);
  detail = buf;
  return std::abs(rep.max_abs_small - 1.031192) <= 1e-4 &&
         std::abs(rep.max_re_small - 1.000036) <= 1e-4;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {1, "v(10^6, k) exact, within 10 s", criterion1},
      {2, "v(2^28, k) exact, within 30 min", criterion2},
      {3, "n=10^6 eigenvalue row within 1e-4", criterion3},
      {4, "fast/lattice/naive and charpoly oracle equivalence", criterion4},
      {5, "determinant identities exact", criterion5},
      {6, "eigenvector residuals and biorthogonality within 1e-8", criterion6},
      {7, "large-eigenvalue asymptotic deviation bound", criterion7},
      {8, "truncated Dirichlet determinant within 1e-12 / 1e-3", criterion8},
      {9, "2^36 counterexample column embedded and solver-consistent", criterion9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", c.id, c.label,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
