#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncfree/algebra.hpp"

using namespace ncfree;

namespace {

// Tr(a b^*) computed entrywise.
Scalar hs(const CoeffElem& a, const CoeffElem& b) {
  Scalar s;
  for (int r = 0; r < a.k(); ++r)
    for (int c = 0; c < a.k(); ++c) s += a(r, c) * b(r, c).conj();
  return s;
}

} // namespace

TEST_CASE("matrix-unit products") {
  const auto e12 = CoeffElem::unit(2, 0, 1);
  const auto e21 = CoeffElem::unit(2, 1, 0);
  CHECK(coeff_mul(e12, e21) == CoeffElem::unit(2, 0, 0));
  CHECK(coeff_mul(e12, e12).is_zero());
  CHECK(coeff_mul(CoeffElem::identity(2), e21) == e21);
  CHECK(coeff_mul(CoeffElem::unit(2, 0, 0) + CoeffElem::unit(2, 1, 1), e12) == e12);
  CHECK_THROWS_AS(coeff_mul(e12, CoeffElem::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(CoeffElem::unit(2, 2, 0), std::out_of_range);
}

TEST_CASE("fuse agrees with the matrix product of units") {
  for (int k = 1; k <= 3; ++k) {
    const AlgebraSpec alg = k == 1 ? AlgebraSpec::scalar() : AlgebraSpec::matrix(k);
    for (int a = 0; a < k * k; ++a)
      for (int b = 0; b < k * k; ++b) {
        const auto prod = coeff_mul(CoeffElem::unit(k, a / k, a % k), CoeffElem::unit(k, b / k, b % k));
        const int f = alg.fuse(a, b);
        if (f < 0) {
          CHECK(prod.is_zero());
        } else {
          CHECK(prod == CoeffElem::unit(k, f / k, f % k));
        }
      }
  }
}

TEST_CASE("normalized trace is the first dual functional") {
  const auto phi = dual_basis(2);
  REQUIRE(phi.size() == 4);
  CHECK(apply_functional(phi[0], CoeffElem::identity(2)) == Scalar(1));
  CHECK(apply_functional(phi[0], CoeffElem::unit(2, 0, 0)) == Scalar::rational(1, 2));
  for (std::size_t j = 1; j < phi.size(); ++j) CHECK(apply_functional(phi[j], CoeffElem::identity(2)).is_zero());

  const auto phi1 = dual_basis(1);
  REQUIRE(phi1.size() == 1);
  CHECK(apply_functional(phi1[0], CoeffElem::identity(1)) == Scalar(1));
}

TEST_CASE("generalized Gell-Mann matrices are HS-orthonormal and traceless") {
  for (int k = 2; k <= 4; ++k) {
    const auto alpha = dual_basis_matrices(k);
    REQUIRE(alpha.size() == static_cast<std::size_t>(k * k));
    CHECK(alpha[0] == Scalar::rational(1, k) * CoeffElem::identity(k));
    for (std::size_t i = 1; i < alpha.size(); ++i) {
      CHECK(alpha[i].trace().is_zero());
      for (std::size_t j = 1; j < alpha.size(); ++j) CHECK(hs(alpha[i], alpha[j]) == Scalar(i == j ? 1 : 0));
    }
  }
}

TEST_CASE("functional values follow phi_j(X) = sum X_rs alpha_j[r, s]") {
  const int k = 3;
  const auto phi = dual_basis(k);
  const auto alpha = dual_basis_matrices(k);
  CoeffElem x(k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) x(r, c) = Scalar(mpq_class(r - 2 * c + 1, c + 1), mpq_class(r * c));
  for (std::size_t j = 0; j < phi.size(); ++j) {
    Scalar direct;
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) direct += x(r, c) * alpha[j](r, c);
    if (j == 0) direct = x.trace() * Scalar::rational(1, k);
    CHECK(apply_functional(phi[j], x) == direct);
  }
}

TEST_CASE("reconstruction basis is dual to the functionals") {
  for (int k = 1; k <= 3; ++k) {
    const auto phi = dual_basis(k);
    const auto beta = dual_reconstruction_basis(k);
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (std::size_t j = 0; j < beta.size(); ++j)
        CHECK(apply_functional(phi[i], beta[j]) == Scalar(i == j ? 1 : 0));

    CoeffElem a(k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) a(r, c) = Scalar(r + 3 * c - 1);
    CoeffElem back(k);
    for (std::size_t j = 0; j < beta.size(); ++j) back += apply_functional(phi[j], a) * beta[j];
    CHECK(back == a);
  }
}

TEST_CASE("exact inversion") {
  std::vector<std::vector<Scalar>> m{{Scalar(2), Scalar::sqrt(2)}, {Scalar(1), Scalar::imag_unit()}};
  const auto inv = invert(m);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Scalar s;
      for (int l = 0; l < 2; ++l) s += m[i][l] * inv[l][j];
      CHECK(s == Scalar(i == j ? 1 : 0));
    }
  CHECK_THROWS_AS(invert({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}), std::domain_error);
}

TEST_CASE("algebra specs") {
  CHECK(AlgebraSpec::matrix(2).dim() == 4);
  CHECK(AlgebraSpec::scalar().unit_indices() == std::vector<int>{0});
  CHECK(AlgebraSpec::matrix(3).unit_indices() == std::vector<int>{0, 4, 8});
  CHECK_THROWS_AS(AlgebraSpec::matrix(0), std::invalid_argument);
  CHECK(CoeffAlgebra::get(AlgebraSpec::matrix(2)) == CoeffAlgebra::get(AlgebraSpec::matrix(2)));
}
