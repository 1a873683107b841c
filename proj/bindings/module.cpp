#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "dirmat/dense_matrix.hpp"
#include "dirmat/dirichlet.hpp"
#include "dirmat/exact_oracle.hpp"
#include "dirmat/reference_tables.hpp"
#include "dirmat/spectra.hpp"
#include "dirmat/vnk.hpp"

namespace py = pybind11;
using namespace dirmat;

namespace {

py::object to_pyint(const BigInt& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

BigInt from_pyint(const py::handle& h) {
  return BigInt(py::str(h).cast<std::string>());
}

std::vector<BigInt> int_list(const py::sequence& seq) {
  std::vector<BigInt> out;
  out.reserve(seq.size());
  for (const auto& item : seq) out.push_back(from_pyint(item));
  return out;
}

py::list pyint_list(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_pyint(x));
  return out;
}

AVariant parse_variant(const std::string& name) {
  if (name == "A") return AVariant::A;
  if (name == "Atilde") return AVariant::Atilde;
  throw InputError("variant must be 'A' or 'Atilde'");
}

DenseMatrix matrix_from_rows(const py::sequence& rows) {
  const std::size_t n = rows.size();
  DenseMatrix m(n, ScalarMode::ExactInt);
  for (std::size_t i = 0; i < n; ++i) {
    py::sequence row = rows[i].cast<py::sequence>();
    if (row.size() != n) throw InputError("matrix rows must form a square matrix");
    for (std::size_t j = 0; j < n; ++j) m.int_at(i, j) = from_pyint(row[j]);
  }
  return m;
}

py::list matrix_to_rows(const DenseMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m.mode() == ScalarMode::ExactInt)
        row.append(to_pyint(m.int_at(i, j)));
      else
        row.append(py::cast(m.cplx_at(i, j)));
    }
    rows.append(row);
  }
  return rows;
}

py::dict spectrum_dict(const SpectrumReport& rep) {
  py::dict out;
  out["n"] = rep.n;
  out["r"] = rep.r;
  out["precision_bits"] = rep.precision_bits;
  out["trivial_multiplicity"] = to_pyint(rep.trivial_multiplicity);
  py::list eigenvalues, eigenvalue_strings, certificates, converged, large;
  for (const auto& root : rep.roots) {
    eigenvalues.append(py::cast(root.lambda.to_double()));
    eigenvalue_strings.append(py::make_tuple(root.lambda.re.str(0, std::ios_base::scientific),
                                             root.lambda.im.str(0, std::ios_base::scientific)));
    certificates.append(root.certificate.convert_to<double>());
    converged.append(root.converged);
    large.append(root.large);
  }
  out["eigenvalues"] = eigenvalues;
  out["eigenvalue_strings"] = eigenvalue_strings;
  out["certificates"] = certificates;
  out["converged"] = converged;
  out["large"] = large;
  out["lambda_plus"] = rep.lambda_plus.convert_to<double>();
  out["lambda_minus"] = rep.lambda_minus.convert_to<double>();
  out["delta_plus"] = rep.delta_plus;
  out["delta_minus"] = rep.delta_minus;
  if (rep.has_small) {
    out["max_abs_small"] = rep.max_abs_small;
    out["max_re_small"] = rep.max_re_small;
  } else {
    out["max_abs_small"] = py::none();
    out["max_re_small"] = py::none();
  }
  out["min_separation"] = rep.min_separation.convert_to<double>();
  out["separation_ok"] = rep.separation_ok;
  out["all_converged"] = rep.all_converged;
  return out;
}

py::dict eigvec_dict(const EigvecReport& rep) {
  py::dict out;
  out["lambda"] = py::cast(rep.lambda.to_double());
  py::list entries;
  for (const auto& e : rep.entries) entries.append(py::cast(e.to_double()));
  out["entries"] = entries;
  out["verified"] = rep.verified;
  out["residual"] = rep.residual;
  out["condition"] = rep.condition;
  out["ok"] = rep.ok;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirichlet-series matrices: exact tables, determinants, spectra";
  m.attr("__version__") = "0.1.0";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_RuntimeError);

  m.def(
      "mobius_sieve",
      [](std::size_t n) {
        auto mu = mobius_sieve(n);
        return std::vector<int>(mu.begin() + 1, mu.end());
      },
      py::arg("n"), "Moebius function values mu(1..n).");

  m.def(
      "mertens",
      [](std::size_t n) {
        auto mu = mobius_sieve(n);
        long long acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += mu[k];
        return acc;
      },
      py::arg("n"), "Mertens function M(n).");

  m.def(
      "dirichlet_convolve",
      [](const py::sequence& a, const py::sequence& b, std::size_t n) {
        return pyint_list(dirichlet_convolve(CoefficientSequence(int_list(a)),
                                             CoefficientSequence(int_list(b)), n));
      },
      py::arg("a"), py::arg("b"), py::arg("n"));

  m.def(
      "dirichlet_inverse",
      [](const py::sequence& a) {
        return pyint_list(dirichlet_inverse(CoefficientSequence(int_list(a))).values());
      },
      py::arg("a"));

  m.def(
      "d_table",
      [](const py::sequence& a, std::size_t n, int k_max) {
        auto t = d_table(CoefficientSequence(int_list(a)), n, k_max);
        py::list levels;
        for (int k = 0; k <= k_max; ++k) {
          py::list level;
          for (std::size_t mm = 1; mm <= n; ++mm) level.append(to_pyint(t.at(mm, k)));
          levels.append(level);
        }
        return levels;
      },
      py::arg("a"), py::arg("n"), py::arg("k_max"),
      "d(m, k) as levels[k][m-1] for 1 <= m <= n, 0 <= k <= k_max.");

  m.def(
      "vnk_naive",
      [](const py::sequence& a, const py::sequence& w, std::uint64_t n, int k) {
        return to_pyint(vnk_naive(CoefficientSequence(int_list(a)),
                                  WeightVector::from_integers(int_list(w)), n, k));
      },
      py::arg("a"), py::arg("w"), py::arg("n"), py::arg("k"));

  m.def(
      "vl_nk",
      [](const py::sequence& a, const py::sequence& w, std::uint64_t ell, std::uint64_t n,
         int k) {
        return to_pyint(vl_nk(CoefficientSequence(int_list(a)),
                              WeightVector::from_integers(int_list(w)), ell, n, k));
      },
      py::arg("a"), py::arg("w"), py::arg("ell"), py::arg("n"), py::arg("k"));

  m.def("vnk_lattice", &vnk_lattice, py::arg("n"), py::arg("k"),
        "Ordered k-tuples of integers >= 2 with product <= n.");

  m.def("split_point", &split_point, py::arg("n"));

  m.def(
      "floor_value_set",
      [](std::uint64_t n) { return FloorValueSet(n).values(); },
      py::arg("n"), "Distinct values of floor(n/i), ascending.");

  py::class_<VnkTable>(m, "VnkTable")
      .def_property_readonly("n", &VnkTable::n)
      .def_property_readonly("r", &VnkTable::r)
      .def_property_readonly("narrow", &VnkTable::narrow)
      .def("value",
           [](const VnkTable& t, std::uint64_t mm, int k) { return to_pyint(t.value(mm, k)); },
           py::arg("m"), py::arg("k"))
      .def("top", [](const VnkTable& t, int k) { return to_pyint(t.top(k)); }, py::arg("k"))
      .def("top_row", [](const VnkTable& t) { return pyint_list(t.top_row()); },
           "v(n, 1..r).")
      .def("floor_values",
           [](const VnkTable& t) { return t.floor_values().values(); })
      .def("save", [](const VnkTable& t, const std::string& path) { t.save_file(path); },
           py::arg("path"))
      .def_static("load", [](const std::string& path) { return VnkTable::load_file(path); },
                  py::arg("path"));

  m.def(
      "vnk_fast",
      [](std::uint64_t n, bool keep_levels) {
        VnkOptions opt;
        opt.keep_levels = keep_levels;
        return vnk_fast(n, opt);
      },
      py::arg("n"), py::arg("keep_levels") = true,
      "Unit-case v(m, k) table over the floor-value set of n.");

  m.def(
      "shifted_charpoly",
      [](std::uint64_t n, const py::sequence& v_values) {
        auto p = shifted_charpoly(n, int_list(v_values));
        py::dict out;
        out["n"] = p.n();
        out["r"] = p.r();
        out["v"] = pyint_list(p.v_values());
        out["trivial_multiplicity"] = to_pyint(p.trivial_multiplicity());
        const auto q = p.shifted_polynomial();
        py::list shifted;
        for (const auto& c : q.coefficients()) shifted.append(to_pyint(c));
        out["shifted_coefficients"] = shifted;
        return out;
      },
      py::arg("n"), py::arg("v_values"),
      "Shifted charpoly data; shifted_coefficients are ascending in y.");

  m.def(
      "expanded_charpoly",
      [](std::uint64_t n, const py::sequence& v_values) {
        const auto expanded = shifted_charpoly(n, int_list(v_values)).expanded();
        py::list out;
        for (const auto& c : expanded.coefficients()) out.append(to_pyint(c));
        return out;
      },
      py::arg("n"), py::arg("v_values"),
      "Monomial-basis charpoly coefficients, ascending (small n).");

  m.def(
      "det_from_vnk",
      [](const VnkTable& t) { return to_pyint(det_from_vnk(t)); }, py::arg("table"));

  m.def(
      "det_weighted",
      [](const py::sequence& a, const py::sequence& w, std::size_t n,
         const std::string& variant) {
        return to_pyint(det_weighted(CoefficientSequence(int_list(a)),
                                     WeightVector::from_integers(int_list(w)), n,
                                     parse_variant(variant)));
      },
      py::arg("a"), py::arg("w"), py::arg("n"), py::arg("variant") = "A");

  m.def(
      "det_weighted_dirichlet",
      [](const py::sequence& a, std::size_t n, std::complex<double> s,
         const std::string& variant) {
        return det_weighted_complex(CoefficientSequence(int_list(a)),
                                    WeightVector::dirichlet(n, s), n,
                                    parse_variant(variant));
      },
      py::arg("a"), py::arg("n"), py::arg("s"), py::arg("variant") = "A",
      "det with weights w_k = k^{-s}, evaluated in complex double.");

  m.def("build_E", [](std::size_t n, std::size_t k) { return matrix_to_rows(build_E(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def(
      "build_D",
      [](const py::sequence& a, std::size_t n) {
        return matrix_to_rows(build_D(CoefficientSequence(int_list(a)), n));
      },
      py::arg("a"), py::arg("n"));
  m.def(
      "build_A",
      [](const py::sequence& a, const py::sequence& w, std::size_t n,
         const std::string& variant) {
        return matrix_to_rows(build_A(CoefficientSequence(int_list(a)),
                                      WeightVector::from_integers(int_list(w)), n,
                                      parse_variant(variant)));
      },
      py::arg("a"), py::arg("w"), py::arg("n"), py::arg("variant") = "A");

  m.def(
      "det_exact",
      [](const py::sequence& rows) { return to_pyint(det_exact(matrix_from_rows(rows))); },
      py::arg("rows"), "Exact determinant of an integer matrix (nested lists).");

  m.def(
      "charpoly_exact",
      [](const py::sequence& rows) {
        const auto p = charpoly_exact(matrix_from_rows(rows));
        py::list out;
        for (const auto& c : p.coefficients()) out.append(to_pyint(c));
        return out;
      },
      py::arg("rows"), "Exact charpoly coefficients, ascending.");

  m.def(
      "eig_residual",
      [](const py::sequence& rows, std::complex<double> lambda,
         const std::vector<std::complex<double>>& vec, const std::string& side) {
        EigSide s;
        if (side == "right")
          s = EigSide::Right;
        else if (side == "left")
          s = EigSide::Left;
        else
          throw InputError("side must be 'right' or 'left'");
        return eig_residual(matrix_from_rows(rows), lambda, vec, s);
      },
      py::arg("rows"), py::arg("lambda"), py::arg("vec"), py::arg("side") = "right");

  m.def(
      "spectrum",
      [](std::uint64_t n, unsigned precision_bits) {
        auto table = vnk_fast(n);
        auto rep = classify_spectrum(n, solve_roots(shifted_charpoly(table), precision_bits));
        return spectrum_dict(rep);
      },
      py::arg("n"), py::arg("precision_bits") = 192,
      "Unit-case nontrivial spectrum of the n x n matrix.");

  m.def(
      "spectrum_from_v",
      [](std::uint64_t n, const py::sequence& v_values, unsigned precision_bits) {
        auto rep = classify_spectrum(
            n, solve_roots(shifted_charpoly(n, int_list(v_values)), precision_bits));
        return spectrum_dict(rep);
      },
      py::arg("n"), py::arg("v_values"), py::arg("precision_bits") = 192);

  m.def(
      "eigenvector_right",
      [](const py::sequence& a, const py::sequence& w, std::uint64_t n,
         std::complex<double> lambda) {
        return eigvec_dict(eigenvector_right(CoefficientSequence(int_list(a)),
                                             WeightVector::from_integers(int_list(w)), n,
                                             BigComplex(lambda)));
      },
      py::arg("a"), py::arg("w"), py::arg("n"), py::arg("lambda"));

  m.def(
      "eigenvector_left",
      [](const py::sequence& a, std::uint64_t n, std::complex<double> lambda,
         const py::object& w_verify) {
        if (w_verify.is_none())
          return eigvec_dict(
              eigenvector_left(CoefficientSequence(int_list(a)), n, BigComplex(lambda)));
        auto w = WeightVector::from_integers(int_list(w_verify.cast<py::sequence>()));
        return eigvec_dict(
            eigenvector_left(CoefficientSequence(int_list(a)), n, BigComplex(lambda), &w));
      },
      py::arg("a"), py::arg("n"), py::arg("lambda"), py::arg("w_verify") = py::none());

  m.def(
      "published_vnk_column",
      [](std::uint64_t n) -> py::object {
        const auto* col = reference::vnk_column(n);
        if (col == nullptr) return py::none();
        py::list out;
        for (auto v : col->values) out.append(v);
        return out;
      },
      py::arg("n"));

  m.def("published_eigentable", []() {
    py::list out;
    for (const auto& row : reference::eigentable())
      out.append(py::make_tuple(row.n, row.max_abs, row.max_re));
    return out;
  });
}
