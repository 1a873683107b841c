// Command-line front end: v(n,k) tables, eigenvalue spectra, determinant
// identities, and reproduction of the published reference tables.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 numerical non-convergence.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "dirmat/dense_matrix.hpp"
#include "dirmat/dirichlet.hpp"
#include "dirmat/exact_oracle.hpp"
#include "dirmat/reference_tables.hpp"
#include "dirmat/spectra.hpp"
#include "dirmat/vnk.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNoConvergence = 3;

struct Options {
  std::uint64_t n = 0;
  int k = -1;
  unsigned precision = 192;
  std::string weights = "unit";
  std::string coeffs = "unit";
  std::string format = "csv";
  std::string cache_dir;
  bool verify_dense = false;
  bool extended = false;
  bool heroic = false;
  std::string matrix = "C";
  std::string target;
};

std::string effective_cache_dir(const Options& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("DIRMAT_CACHE_DIR")) return env;
  return {};
}

dirmat::CoefficientSequence parse_coeffs(const std::string& spec, std::size_t n) {
  if (spec == "unit") return dirmat::CoefficientSequence::ones(n);
  auto seq = dirmat::CoefficientSequence::from_file(spec);
  if (seq.length() < n)
    throw dirmat::InputError("coefficient file shorter than n: " + spec);
  return seq;
}

dirmat::WeightVector parse_weights(const std::string& spec, std::size_t n) {
  if (spec == "unit") return dirmat::WeightVector::ones(n);
  if (spec.rfind("dirichlet:", 0) == 0) {
    const std::string arg = spec.substr(10);
    double re = 0.0, im = 0.0;
    const auto comma = arg.find(',');
    try {
      re = std::stod(arg.substr(0, comma));
      if (comma != std::string::npos) im = std::stod(arg.substr(comma + 1));
    } catch (const std::exception&) {
      throw dirmat::InputError("bad dirichlet weight spec: " + spec);
    }
    return dirmat::WeightVector::dirichlet(n, {re, im});
  }
  auto w = dirmat::WeightVector::from_file(spec);
  if (w.length() < n) throw dirmat::InputError("weight file shorter than n: " + spec);
  return w;
}

std::string cache_path(const std::string& dir, std::uint64_t n) {
  return dir + "/vnk-" + std::to_string(n) + ".cache";
}

dirmat::VnkTable load_or_compute(std::uint64_t n, const std::string& cache_dir) {
  if (cache_dir.empty()) return dirmat::vnk_fast(n);
  std::filesystem::create_directories(cache_dir);
  const std::string path = cache_path(cache_dir, n);
  if (std::filesystem::exists(path)) {
    try {
      return dirmat::VnkTable::load_file(path);
    } catch (const dirmat::InputError& e) {
      std::cerr << "warning: ignoring unreadable cache (" << e.what() << ")\n";
    }
  }
  auto table = dirmat::vnk_fast(n);
  table.save_file(path);
  return table;
}

std::string format_complex(std::complex<double> z) {
  char buf[96];
  if (z.imag() == 0.0)
    std::snprintf(buf, sizeof(buf), "%.17g", z.real());
  else
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

int cmd_vnk(const Options& opt) {
  if (opt.n < 1) throw dirmat::InputError("vnk: --n must be >= 1");
  const bool unit = opt.weights == "unit" && opt.coeffs == "unit";
  const int r = dirmat::floor_log2(opt.n);

  std::vector<std::pair<int, dirmat::BigInt>> rows;
  auto wanted = [&](int k) { return opt.k < 0 || k == opt.k; };
  if (unit) {
    auto table = load_or_compute(opt.n, effective_cache_dir(opt));
    if (opt.k >= 0) {
      rows.emplace_back(opt.k, table.top(opt.k));
    } else {
      for (int k = 1; k <= r; ++k) rows.emplace_back(k, table.top(k));
    }
  } else {
    if (opt.n > dirmat::kVnkNaiveCap)
      throw dirmat::CapError(
          "vnk: non-unit sequences route through the definitional sum, which is "
          "capped at n <= 100000");
    auto a = parse_coeffs(opt.coeffs, opt.n);
    auto w = parse_weights(opt.weights, opt.n);
    if (w.mode() != dirmat::ScalarMode::ExactInt)
      throw dirmat::InputError("vnk: exact-integer weights required");
    auto table = dirmat::d_table(a, opt.n, r);
    for (int k = opt.k >= 0 ? opt.k : 1; k <= (opt.k >= 0 ? opt.k : r); ++k)
      if (wanted(k)) rows.emplace_back(k, dirmat::vnk_naive(table, w, opt.n, k));
  }

  if (opt.format == "csv") {
    std::cout << "k,v\n";
    for (const auto& [k, v] : rows) std::cout << k << ',' << v.str() << '\n';
  } else {
    for (const auto& [k, v] : rows) {
      json rec{{"record", "vnk"}, {"n", std::to_string(opt.n)}, {"k", k}, {"v", v.str()}};
      std::cout << rec.dump() << '\n';
    }
  }
  return kExitOk;
}

int cmd_spectra(const Options& opt) {
  if (opt.n < 2) throw dirmat::InputError("spectra: --n must be >= 2");
  if (opt.weights != "unit" || opt.coeffs != "unit")
    throw dirmat::InputError("spectra: only the unit case is supported");
  auto table = load_or_compute(opt.n, effective_cache_dir(opt));
  auto poly = dirmat::shifted_charpoly(table);
  auto roots = dirmat::solve_roots(poly, opt.precision);
  auto report = dirmat::classify_spectrum(opt.n, roots);
  if (opt.format == "csv") {
    dirmat::emit_spectrum_csv(report, std::cout);
    if (report.has_small) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "max_abs=%.6f max_re=%.6f", report.max_abs_small,
                    report.max_re_small);
      std::cout << buf << '\n';
    } else {
      std::cout << "no small eigenvalues\n";
    }
  } else {
    dirmat::emit_spectrum_jsonl(report, std::cout);
  }
  return report.all_converged ? kExitOk : kExitNoConvergence;
}

int cmd_det(const Options& opt) {
  if (opt.n < 1) throw dirmat::InputError("det: --n must be >= 1");
  const std::size_t n = static_cast<std::size_t>(opt.n);

  std::string coeff_spec = opt.coeffs;
  std::string weight_spec = opt.weights;
  dirmat::AVariant variant = dirmat::AVariant::A;
  if (opt.matrix == "C") {
    coeff_spec = "unit";
    weight_spec = "unit";
  } else if (opt.matrix == "B") {
    coeff_spec = "unit";
  } else if (opt.matrix == "Atilde") {
    variant = dirmat::AVariant::Atilde;
  }

  auto a = parse_coeffs(coeff_spec, n);
  auto w = parse_weights(weight_spec, n);
  const bool exact = w.mode() == dirmat::ScalarMode::ExactInt;

  std::string value;
  std::optional<dirmat::BigInt> exact_value;
  if (exact) {
    exact_value = dirmat::det_weighted(a, w, n, variant);
    value = exact_value->str();
  } else {
    value = format_complex(dirmat::det_weighted_complex(a, w, n, variant));
  }

  bool verified = false, match = true;
  std::string dense_value;
  if (opt.verify_dense) {
    if (n > 512)
      throw dirmat::CapError("det: dense verification is capped at n <= 512");
    if (!exact)
      throw dirmat::InputError(
          "det: dense verification requires exact-integer weights");
    auto dense = dirmat::build_A(a, w, n, variant);
    dirmat::BigInt d = dirmat::det_exact(dense);
    dense_value = d.str();
    verified = true;
    match = (d == *exact_value);
  }

  if (opt.format == "csv") {
    std::cout << "key,value\n";
    std::cout << "n," << opt.n << '\n';
    std::cout << "matrix," << opt.matrix << '\n';
    std::cout << "value," << value << '\n';
    if (verified) {
      std::cout << "dense_value," << dense_value << '\n';
      std::cout << "match," << (match ? 1 : 0) << '\n';
    }
  } else {
    json rec{{"record", "det"},
             {"n", std::to_string(opt.n)},
             {"matrix", opt.matrix},
             {"value", value}};
    if (verified) {
      rec["dense_value"] = dense_value;
      rec["match"] = match;
    }
    std::cout << rec.dump() << '\n';
  }
  return (verified && !match) ? kExitMismatch : kExitOk;
}

int reproduce_table1(const Options& opt) {
  int failures = 0;
  for (const auto& col : dirmat::reference::vnk_columns()) {
    const bool run = col.n == 1000000ull || (opt.extended && col.n == 268435456ull) ||
                     (opt.heroic && col.n == 68719476736ull);
    if (!run) continue;
    auto table = load_or_compute(col.n, effective_cache_dir(opt));
    for (std::size_t i = 0; i < col.values.size(); ++i) {
      const int k = static_cast<int>(i) + 1;
      const dirmat::BigInt got = table.top(k);
      const dirmat::BigInt want(col.values[i]);
      if (got == want) {
        std::cout << "[PASS] v(" << col.n << "," << k << ") = " << got.str() << '\n';
      } else {
        std::cout << "[FAIL] v(" << col.n << "," << k << ") expected " << want.str()
                  << " got " << got.str() << '\n';
        ++failures;
      }
    }
  }
  return failures == 0 ? kExitOk : kExitMismatch;
}

int reproduce_eigentable(const Options& opt) {
  constexpr double kTol = 1e-4;
  int failures = 0;
  for (const auto& row : dirmat::reference::eigentable()) {
    const bool run = row.n == 1000000ull || (opt.extended && row.n == 268435456ull) ||
                     (opt.heroic && row.n > 268435456ull);
    if (!run) continue;
    auto table = load_or_compute(row.n, effective_cache_dir(opt));
    auto roots = dirmat::solve_roots(dirmat::shifted_charpoly(table), opt.precision);
    auto report = dirmat::classify_spectrum(row.n, roots);
    auto check = [&](const char* what, double got, double want) {
      if (std::abs(got - want) <= kTol) {
        std::printf("[PASS] n=%llu %s = %.6f\n",
                    static_cast<unsigned long long>(row.n), what, got);
      } else {
        std::printf("[FAIL] n=%llu %s expected %.6f got %.6f\n",
                    static_cast<unsigned long long>(row.n), what, want, got);
        ++failures;
      }
    };
    check("max_abs", report.max_abs_small, row.max_abs);
    check("max_re", report.max_re_small, row.max_re);
  }
  return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_reproduce(const Options& opt) {
  if (opt.target == "table1") return reproduce_table1(opt);
  if (opt.target == "eigentable") return reproduce_eigentable(opt);
  throw dirmat::InputError("reproduce: target must be table1 or eigentable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet-series matrices: v(n,k) tables, determinants, spectra"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_n) {
    if (needs_n) sub->add_option("--n", opt.n, "matrix dimension n")->required();
    sub->add_option("--precision", opt.precision, "working precision in bits (>= 64)")
        ->default_val(192);
    sub->add_option("--weights", opt.weights,
                    "weight spec: unit | dirichlet:<re>[,<im>] | <file>");
    sub->add_option("--coeffs", opt.coeffs, "coefficient spec: unit | <file>");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json-lines"}));
    sub->add_option("--cache-dir", opt.cache_dir,
                    "cache directory (env DIRMAT_CACHE_DIR; flag wins)");
  };

  auto* vnk = app.add_subcommand("vnk", "print v(n,k) for k = 1..floor_log2(n)");
  add_common(vnk, true);
  vnk->add_option("--k", opt.k, "print a single k row");

  auto* spectra = app.add_subcommand("spectra", "nontrivial eigenvalue report");
  add_common(spectra, true);

  auto* det = app.add_subcommand("det", "determinant via the weighted-sum identity");
  add_common(det, true);
  det->add_option("--matrix", opt.matrix, "matrix family")
      ->check(CLI::IsMember({"A", "Atilde", "B", "C"}));
  det->add_flag("--verify-dense", opt.verify_dense,
                "also compute the dense exact determinant (n <= 512)");

  auto* reproduce =
      app.add_subcommand("reproduce", "check published tables against recomputation");
  reproduce->add_option("target", opt.target, "table1 | eigentable")->required();
  add_common(reproduce, false);
  reproduce->add_flag("--extended", opt.extended, "include the n = 2^28 column");
  reproduce->add_flag("--heroic", opt.heroic,
                      "include the n = 2^36 column (long-running)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(vnk)) return cmd_vnk(opt);
    if (app.got_subcommand(spectra)) return cmd_spectra(opt);
    if (app.got_subcommand(det)) return cmd_det(opt);
    if (app.got_subcommand(reproduce)) return cmd_reproduce(opt);
  } catch (const dirmat::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const dirmat::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const dirmat::StructureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  }
  return kExitInvalidInput;
}
