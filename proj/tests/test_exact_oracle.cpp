#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "dirmat/dirichlet.hpp"
#include "dirmat/exact_oracle.hpp"
#include "oracles.hpp"

using namespace dirmat;

namespace {

DenseMatrix redheffer(std::size_t n) {
  return build_A(CoefficientSequence::ones(n), WeightVector::ones(n), n, AVariant::A);
}

DenseMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  DenseMatrix m(n, ScalarMode::ExactInt);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.int_at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(det_exact(DenseMatrix::identity(7)) == 1);
  CHECK(det_exact(redheffer(2)) == 0);   // 2x2 all-ones
  CHECK(det_exact(redheffer(6)) == -1);  // Mertens(6)
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  for (std::size_t n : {2u, 3u, 5u, 8u, 10u, 12u})
    for (std::uint64_t seed : {41u, 42u, 43u}) {
      auto m = random_matrix(n, seed * 100 + n);
      CHECK(det_exact(m) == oracle::det_cofactor(m));
    }
}

TEST_CASE("determinant of singular and permuted matrices") {
  // duplicate rows
  DenseMatrix m(3, ScalarMode::ExactInt);
  for (std::size_t j = 0; j < 3; ++j) {
    m.int_at(0, j) = static_cast<int>(j) + 1;
    m.int_at(1, j) = static_cast<int>(j) + 1;
    m.int_at(2, j) = 1;
  }
  CHECK(det_exact(m) == 0);

  // permutation matrix needing a pivot swap
  DenseMatrix p(3, ScalarMode::ExactInt);
  p.int_at(0, 1) = 1;
  p.int_at(1, 0) = 1;
  p.int_at(2, 2) = 1;
  CHECK(det_exact(p) == -1);
}

TEST_CASE("charpoly of small matrices") {
  auto ident = charpoly_exact(DenseMatrix::identity(3));
  // (x-1)^3
  CHECK(ident.degree() == 3);
  CHECK(ident.coeff(0) == -1);
  CHECK(ident.coeff(1) == 3);
  CHECK(ident.coeff(2) == -3);
  CHECK(ident.coeff(3) == 1);

  auto c2 = charpoly_exact(redheffer(2));
  // x^2 - 2x = (x-1)^2 - v(2,1) with v(2,1) = 1
  CHECK(c2.degree() == 2);
  CHECK(c2.coeff(0) == 0);
  CHECK(c2.coeff(1) == -2);
  CHECK(c2.coeff(2) == 1);

  // p_6(x) = (x-1)^3 ((x-1)^3 - 5(x-1) - 3) with v(6,1) = 5, v(6,2) = 3
  auto c6 = charpoly_exact(redheffer(6));
  IntegerPolynomial cube = binomial_power(BigInt(-1), 3);
  IntegerPolynomial tail(std::vector<BigInt>{BigInt(2), BigInt(-5)});  // -5(x-1) - 3
  CHECK(c6 == cube * (cube + tail));
}

TEST_CASE("charpoly at zero matches the determinant") {
  for (std::size_t n : {3u, 5u, 9u})
    for (std::uint64_t seed : {51u, 52u}) {
      auto m = random_matrix(n, seed * 10 + n);
      auto p = charpoly_exact(m);
      BigInt sign = (n % 2 == 0) ? 1 : -1;
      CHECK(p.coeff(0) == sign * det_exact(m));
    }
}

TEST_CASE("charpoly dimension cap is enforced") {
  DenseMatrix big(513, ScalarMode::ExactInt);
  CHECK_THROWS_AS(charpoly_exact(big), CapError);
}

TEST_CASE("taylor shift and binomial power helpers") {
  // (x+1)^2 shifted by -1 is x^2
  auto sq = binomial_power(BigInt(1), 2).taylor_shift(BigInt(-1));
  CHECK(sq.degree() == 2);
  CHECK(sq.coeff(0) == 0);
  CHECK(sq.coeff(1) == 0);
  CHECK(sq.coeff(2) == 1);

  auto cube = binomial_power(BigInt(-1), 3);  // (x-1)^3
  CHECK(cube.coeff(0) == -1);
  CHECK(cube.coeff(1) == 3);
  CHECK(cube.coeff(2) == -3);
  CHECK(cube.coeff(3) == 1);
}

TEST_CASE("eig_residual on exact, perturbed, and invalid eigenpairs") {
  auto ident = DenseMatrix::identity(4);
  std::vector<std::complex<double>> e1{1.0, 0.0, 0.0, 0.0};
  CHECK(eig_residual(ident, {1.0, 0.0}, e1, EigSide::Right) == 0.0);
  CHECK(eig_residual(ident, {2.0, 0.0}, e1, EigSide::Right) == doctest::Approx(1.0));

  std::vector<std::complex<double>> zero(4, 0.0);
  CHECK_THROWS_AS(eig_residual(ident, {1.0, 0.0}, zero, EigSide::Right), InputError);
}

TEST_CASE("eig_residual separates left and right sides") {
  // C_2 = [[1,1],[1,1]]: right and left eigenvectors for lambda = 2 coincide,
  // but for an asymmetric 2x2 they differ.
  DenseMatrix m(2, ScalarMode::ExactInt);
  m.int_at(0, 0) = 1;
  m.int_at(0, 1) = 2;
  m.int_at(1, 0) = 0;
  m.int_at(1, 1) = 3;
  // right eigenvector for lambda=3 is (1, 1); left is (0, 1)
  std::vector<std::complex<double>> right{1.0, 1.0};
  std::vector<std::complex<double>> left{0.0, 1.0};
  CHECK(eig_residual(m, {3.0, 0.0}, right, EigSide::Right) == doctest::Approx(0.0));
  CHECK(eig_residual(m, {3.0, 0.0}, left, EigSide::Left) == doctest::Approx(0.0));
  CHECK(eig_residual(m, {3.0, 0.0}, left, EigSide::Right) > 0.5);
}
