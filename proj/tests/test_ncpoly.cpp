#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncfree/ncpoly.hpp"
#include "ncfree/random.hpp"

using namespace ncfree;

namespace {

const AlgebraSpec M2 = AlgebraSpec::matrix(2);
const AlgebraSpec C1 = AlgebraSpec::scalar();

} // namespace

TEST_CASE("normalize merges, cancels and expands coefficients") {
  const auto b0 = CoeffElem::unit(2, 0, 1);
  const auto b1 = CoeffElem::unit(2, 1, 1);
  const auto id = CoeffElem::identity(2);
  CHECK(normalize(M2, 1, {{Scalar(1), {b0, b1}, {0}}, {Scalar(-1), {b0, b1}, {0}}}).is_zero());

  const auto one = CoeffElem::identity(1);
  const NCPoly five = normalize(C1, 1, {{Scalar(2), {one, one}, {0}}, {Scalar(3), {one, one}, {0}}});
  CHECK(five == Scalar(5) * PolyRing(C1, 1).x(0));

  // (e11 + e22) X with identity on the right: four basis words e_aa X e_bb.
  const NCPoly p = normalize(M2, 1, {{Scalar(1), {CoeffElem::unit(2, 0, 0) + CoeffElem::unit(2, 1, 1), id}, {0}}});
  CHECK(p.size() == 4);
  CHECK(p == PolyRing(M2, 1).x(0));

  CHECK_THROWS_AS(normalize(M2, 1, {{Scalar(1), {b0}, {0}}}), std::invalid_argument);
  CHECK_THROWS_AS(normalize(M2, 1, {{Scalar(1), {b0, b1}, {3}}}), std::invalid_argument);
  CHECK_THROWS_AS(normalize(M2, 1, {{Scalar(1), {CoeffElem::identity(3)}, {}}}), std::invalid_argument);
}

TEST_CASE("addition keeps distinct coefficient words apart") {
  PolyRing R(M2, 1);
  const NCPoly x = R.x(0);
  const NCPoly bx = R.e(0, 0) * x;
  const NCPoly s = x + bx;
  CHECK(s.size() == x.size()); // every word of bx already occurs in x
  CHECK(s - bx == x);
  CHECK(x + R.zero() == x);
  CHECK((x + Scalar(-1) * x).is_zero());
  CHECK_THROWS_AS(x + PolyRing(C1, 1).x(0), std::invalid_argument);
}

TEST_CASE("multiplication fuses coefficients") {
  PolyRing R(M2, 1);
  const NCPoly x = R.x(0);
  CHECK(R.e(0, 1) * (R.e(1, 0) * x) == R.e(0, 0) * x);
  CHECK((R.e(0, 1) * R.e(0, 1)).is_zero());
  CHECK(R.one() * x == x);
  CHECK(x * R.one() == x);

  PolyRing S(C1, 1);
  const NCPoly y = S.x(0);
  CHECK(y * y == S.word({0, 0, 0}, {0, 0}));
  // index 1 = e12, index 2 = e21, index 3 = e22: e21 e12 = e22, e21 e21 = 0
  CHECK(R.word({1, 2}, {0}) * R.word({1, 0}, {0}) == R.word({1, 3, 0}, {0, 0}));
  CHECK((R.word({1, 2}, {0}) * R.word({2, 0}, {0})).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  for (int t = 0; t < 60; ++t) {
    Rng rng = stream_for(3, t);
    const AlgebraSpec alg = t % 2 ? M2 : C1;
    const PolyShape shape{0, 3, 3};
    const NCPoly a = random_poly(rng, alg, 2, shape);
    const NCPoly b = random_poly(rng, alg, 2, shape);
    const NCPoly c = random_poly(rng, alg, 2, shape);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(commutator(a, a).is_zero());
    CHECK(commutator(a, b) == Scalar(-1) * commutator(b, a));
  }
}

TEST_CASE("homogeneous components and degree") {
  PolyRing S(C1, 1);
  const NCPoly x = S.x(0);
  const auto comps = homogeneous_components(x * x + x);
  REQUIRE(comps.size() == 2);
  CHECK(comps.at(1) == x);
  CHECK(comps.at(2) == x * x);
  CHECK(homogeneous_components(S.scalar(Scalar(3))).at(0) == S.scalar(Scalar(3)));
  CHECK(homogeneous_components(S.zero()).empty());
  CHECK(degree(x * x * x) == 3);
  CHECK_FALSE(degree(S.zero()).has_value());

  PolyRing T(C1, 2);
  const auto by_letter = components_by_letter(T.x(0) * T.x(1) * T.x(0) + T.x(1), 0);
  CHECK(by_letter.at(2) == T.x(0) * T.x(1) * T.x(0));
  CHECK(by_letter.at(0) == T.x(1));
}

TEST_CASE("commutator examples") {
  PolyRing R(M2, 1);
  const NCPoly x = R.x(0);
  const NCPoly b = R.e(0, 0);
  CHECK(commutator(x, b * x) == x * b * x - b * x * x);
  CHECK(commutator(R.one(), b * x * x).is_zero());
}

TEST_CASE("bimodule actions on tensors") {
  PolyRing R(M2, 1);
  const NCPoly x = R.x(0);
  const NCPoly one = R.one();
  const NCPoly b = R.e(0, 1);
  CHECK(x * tensor_of(one, one) == tensor_of(x, one));
  CHECK(tensor_of(one, one) * x == tensor_of(one, x));
  CHECK(x * tensor_of(one, b) == tensor_of(x, b));
  CHECK(left_act(x, tensor_of(one, one, one)) == tensor_of(x, one, one));
  CHECK(right_act(tensor_of(one, one, one), x) == tensor_of(one, one, x));
}

TEST_CASE("PolyRing letter is the sum of unit-framed words") {
  PolyRing R(AlgebraSpec::matrix(3), 2);
  const NCPoly x = R.x(1);
  CHECK(x.size() == 9);
  for (const auto& [key, c] : x.terms()) {
    CHECK(c == Scalar(1));
    CHECK(key[0].letters == std::vector<std::uint8_t>{1});
  }
  CHECK(R.one() * x * R.one() == x);
  CHECK_THROWS(R.x(2));
  CHECK_THROWS_AS(NCPoly(C1, 0), std::invalid_argument);
}

TEST_CASE("printing") {
  PolyRing S(C1, 1);
  CHECK(to_string(S.zero()) == "0");
  CHECK_FALSE(to_string(S.x(0)).empty());
}
