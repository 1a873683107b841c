#include "dirmat/dense_matrix.hpp"

#include "dirmat/dirichlet.hpp"

namespace dirmat {

DenseMatrix::DenseMatrix(std::size_t dim, ScalarMode mode) : dim_(dim), mode_(mode) {
  if (dim == 0) throw InputError("matrix dimension must be positive");
  if (mode_ == ScalarMode::ExactInt)
    iv_.assign(dim * dim, BigInt(0));
  else
    cv_.assign(dim * dim, std::complex<double>(0.0, 0.0));
}

DenseMatrix DenseMatrix::identity(std::size_t dim, ScalarMode mode) {
  DenseMatrix m(dim, mode);
  for (std::size_t i = 0; i < dim; ++i) {
    if (mode == ScalarMode::ExactInt)
      m.int_at(i, i) = 1;
    else
      m.cplx_at(i, i) = 1.0;
  }
  return m;
}

BigInt& DenseMatrix::int_at(std::size_t i, std::size_t j) {
  if (mode_ != ScalarMode::ExactInt) throw InputError("matrix is not in exact mode");
  return iv_[i * dim_ + j];
}

const BigInt& DenseMatrix::int_at(std::size_t i, std::size_t j) const {
  if (mode_ != ScalarMode::ExactInt) throw InputError("matrix is not in exact mode");
  return iv_[i * dim_ + j];
}

std::complex<double>& DenseMatrix::cplx_at(std::size_t i, std::size_t j) {
  if (mode_ != ScalarMode::ComplexFloat)
    throw InputError("matrix is not in complex-float mode");
  return cv_[i * dim_ + j];
}

const std::complex<double>& DenseMatrix::cplx_at(std::size_t i, std::size_t j) const {
  if (mode_ != ScalarMode::ComplexFloat)
    throw InputError("matrix is not in complex-float mode");
  return cv_[i * dim_ + j];
}

std::complex<double> DenseMatrix::as_complex(std::size_t i, std::size_t j) const {
  if (mode_ == ScalarMode::ExactInt)
    return {iv_[i * dim_ + j].convert_to<double>(), 0.0};
  return cv_[i * dim_ + j];
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  if (dim_ != o.dim_ || mode_ != o.mode_) return false;
  return mode_ == ScalarMode::ExactInt ? iv_ == o.iv_ : cv_ == o.cv_;
}

DenseMatrix build_E(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw InputError("build_E: n and k must be positive");
  DenseMatrix m(n, ScalarMode::ExactInt);
  for (std::size_t i = 1; k * i <= n; ++i) m.int_at(i - 1, k * i - 1) = 1;
  return m;
}

DenseMatrix build_D(const CoefficientSequence& a, std::size_t n) {
  if (a.length() < n) throw InputError("build_D: coefficient sequence too short");
  DenseMatrix m(n, ScalarMode::ExactInt);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; j += i) m.int_at(i - 1, j - 1) = a.at(j / i);
  return m;
}

DenseMatrix build_A(const CoefficientSequence& a, const WeightVector& w, std::size_t n,
                    AVariant variant) {
  if (a.length() < n || w.length() < n)
    throw InputError("build_A: sequences shorter than the dimension");
  const CoefficientSequence series =
      variant == AVariant::A ? a : dirichlet_inverse(a);
  DenseMatrix m(n, w.mode());
  if (w.mode() == ScalarMode::ExactInt) {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; j += i) m.int_at(i - 1, j - 1) = series.at(j / i);
    for (std::size_t i = 2; i <= n; ++i) m.int_at(i - 1, 0) += w.int_at(i);
  } else {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; j += i)
        m.cplx_at(i - 1, j - 1) = {series.at(j / i).convert_to<double>(), 0.0};
    for (std::size_t i = 2; i <= n; ++i) m.cplx_at(i - 1, 0) += w.complex_at(i);
  }
  return m;
}

DenseMatrix matrix_product(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw InputError("matrix_product: dimension mismatch");
  if (lhs.mode() != rhs.mode())
    throw InputError("matrix_product: scalar mode mismatch");
  const std::size_t n = lhs.dim();
  DenseMatrix out(n, lhs.mode());
  if (lhs.mode() == ScalarMode::ExactInt) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const BigInt& l = lhs.int_at(i, k);
        if (l == 0) continue;  // matrices here are triangular or sparse 0/1
        for (std::size_t j = 0; j < n; ++j) {
          const BigInt& r = rhs.int_at(k, j);
          if (r == 0) continue;
          out.int_at(i, j) += l * r;
        }
      }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const std::complex<double> l = lhs.cplx_at(i, k);
        if (l == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) out.cplx_at(i, j) += l * rhs.cplx_at(k, j);
      }
  }
  return out;
}

}  // namespace dirmat
