#include "dirmat/sequences.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace dirmat {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw InputError("empty sequence file: " + path);
  return lines;
}

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

CoefficientSequence::CoefficientSequence(std::vector<BigInt> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw InputError("coefficient sequence must have length >= 1");
  if (values_[0] != 1) throw InputError("coefficient sequence requires a_1 = 1");
}

CoefficientSequence CoefficientSequence::ones(std::size_t n) {
  if (n == 0) throw InputError("coefficient sequence must have length >= 1");
  return CoefficientSequence(std::vector<BigInt>(n, BigInt(1)));
}

CoefficientSequence CoefficientSequence::identity(std::size_t n) {
  if (n == 0) throw InputError("coefficient sequence must have length >= 1");
  std::vector<BigInt> v(n, BigInt(0));
  v[0] = 1;
  return CoefficientSequence(std::move(v));
}

CoefficientSequence CoefficientSequence::from_file(const std::string& path) {
  std::vector<BigInt> v;
  for (const auto& line : read_lines(path)) {
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (!is_integer_token(tok))
      throw InputError("coefficient file must contain decimal integers: " + path);
    v.emplace_back(tok);
  }
  return CoefficientSequence(std::move(v));
}

const BigInt& CoefficientSequence::at(std::size_t i) const {
  if (i < 1 || i > values_.size()) throw InputError("coefficient index out of range");
  return values_[i - 1];
}

WeightVector WeightVector::ones(std::size_t n) {
  if (n == 0) throw InputError("weight vector must have length >= 1");
  WeightVector w;
  w.mode_ = ScalarMode::ExactInt;
  w.ints_.assign(n, BigInt(1));
  return w;
}

WeightVector WeightVector::from_integers(std::vector<BigInt> values) {
  if (values.empty()) throw InputError("weight vector must have length >= 1");
  if (values[0] != 1) throw InputError("weight vector requires w_1 = 1");
  WeightVector w;
  w.mode_ = ScalarMode::ExactInt;
  w.ints_ = std::move(values);
  return w;
}

WeightVector WeightVector::from_complex(std::vector<std::complex<double>> values) {
  if (values.empty()) throw InputError("weight vector must have length >= 1");
  if (values[0] != std::complex<double>(1.0, 0.0))
    throw InputError("weight vector requires w_1 = 1");
  WeightVector w;
  w.mode_ = ScalarMode::ComplexFloat;
  w.cplx_ = std::move(values);
  return w;
}

WeightVector WeightVector::dirichlet(std::size_t n, std::complex<double> s) {
  std::vector<std::complex<double>> v(n);
  for (std::size_t k = 1; k <= n; ++k)
    v[k - 1] = std::pow(std::complex<double>(static_cast<double>(k), 0.0), -s);
  v[0] = {1.0, 0.0};
  return from_complex(std::move(v));
}

WeightVector WeightVector::from_file(const std::string& path) {
  auto lines = read_lines(path);
  bool all_int = true;
  for (const auto& line : lines) {
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    std::string rest;
    if (ss >> rest || !is_integer_token(tok)) {
      all_int = false;
      break;
    }
  }
  if (all_int) {
    std::vector<BigInt> v;
    for (const auto& line : lines) v.emplace_back(line);
    return from_integers(std::move(v));
  }
  std::vector<std::complex<double>> v;
  for (const auto& line : lines) {
    std::istringstream ss(line);
    double re = 0.0, im = 0.0;
    if (!(ss >> re)) throw InputError("bad weight line in " + path + ": " + line);
    ss >> im;
    v.emplace_back(re, im);
  }
  return from_complex(std::move(v));
}

std::size_t WeightVector::length() const {
  return mode_ == ScalarMode::ExactInt ? ints_.size() : cplx_.size();
}

bool WeightVector::is_unit() const {
  if (mode_ != ScalarMode::ExactInt) return false;
  for (const auto& w : ints_)
    if (w != 1) return false;
  return true;
}

const BigInt& WeightVector::int_at(std::size_t k) const {
  if (mode_ != ScalarMode::ExactInt)
    throw InputError("weight vector is not in exact-integer mode");
  if (k < 1 || k > ints_.size()) throw InputError("weight index out of range");
  return ints_[k - 1];
}

std::complex<double> WeightVector::complex_at(std::size_t k) const {
  if (k < 1 || k > length()) throw InputError("weight index out of range");
  if (mode_ == ScalarMode::ExactInt) return {ints_[k - 1].convert_to<double>(), 0.0};
  return cplx_[k - 1];
}

const std::vector<BigInt>& WeightVector::int_values() const {
  if (mode_ != ScalarMode::ExactInt)
    throw InputError("weight vector is not in exact-integer mode");
  return ints_;
}

const std::vector<std::complex<double>>& WeightVector::complex_values() const {
  if (mode_ != ScalarMode::ComplexFloat)
    throw InputError("weight vector is not in complex-float mode");
  return cplx_;
}

}  // namespace dirmat
