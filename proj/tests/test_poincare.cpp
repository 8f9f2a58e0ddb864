#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncfree/poincare.hpp"
#include "ncfree/random.hpp"

using namespace ncfree;

namespace {

const AlgebraSpec M2 = AlgebraSpec::matrix(2);
const AlgebraSpec C1 = AlgebraSpec::scalar();

NCPoly drop_constant(const NCPoly& p, int var = 0) {
  NCPoly out = p.zero_like();
  for (const auto& [d, comp] : components_by_letter(p, var))
    if (d > 0) out += comp;
  return out;
}

bool diff_symmetric(const NCPoly& q) { return flip(free_diff(q, 0)) == free_diff(q, 0); }

} // namespace

TEST_CASE("cyclic exactness examples") {
  PolyRing R(M2, 1);
  const NCPoly x = R.x(0);
  const NCPoly b = R.e(0, 0);
  CHECK(is_cyclically_exact(Scalar(2) * x));
  CHECK_FALSE(is_cyclically_exact(b * x));
  CHECK(is_cyclically_exact(R.zero()));
  CHECK_THROWS_AS(is_cyclically_exact(PolyRing(C1, 2).x(0)), std::invalid_argument);
}

TEST_CASE("cyclic antiderivative examples") {
  PolyRing R(M2, 1);
  const NCPoly x = R.x(0);
  const NCPoly b = R.e(0, 1);
  CHECK(antiderivative_cyclic(Scalar(3) * x * x) == x * x * x);
  CHECK(antiderivative_cyclic(Scalar(2) * x) == x * x);

  // bX + Xb has XbX as an antiderivative; any answer differs from it by a
  // kernel element.
  const NCPoly q = b * x + x * b;
  const NCPoly p = antiderivative_cyclic(q);
  CHECK(cyclic_derivative(p, 0) == q);
  CHECK(kernel_membership(p - x * b * x));

  CHECK_THROWS_AS(antiderivative_cyclic(b * x), NotExact);
  CHECK(antiderivative_cyclic(R.zero()).is_zero());
}

TEST_CASE("gradient exactness examples") {
  PolyRing R(C1, 1);
  const NCPoly x = R.x(0), one = R.one();
  CHECK(is_gradient_exact(tensor_of(one, one)));
  CHECK_FALSE(is_gradient_exact(tensor_of(x, one)));
  const TensorPoly sym = tensor_of(x, one) + tensor_of(one, x);
  CHECK(is_gradient_exact(sym));

  CHECK(antiderivative_grad(tensor_of(one, one)) == x);
  CHECK(antiderivative_grad(sym) == x * x);
  CHECK_THROWS_AS(antiderivative_grad(tensor_of(x, one)), NotExact);
}

TEST_CASE("kernel membership and decomposition") {
  PolyRing R(M2, 1);
  const NCPoly x = R.x(0);
  const NCPoly b = R.e(0, 0), c = R.e(1, 1);
  CHECK(kernel_membership(commutator(x, b * x * x)));
  CHECK_FALSE(kernel_membership(x));
  CHECK(kernel_membership(R.e(0, 1)));

  const auto kb = kernel_decompose(R.e(0, 1));
  CHECK(kb.constant == R.e(0, 1));
  CHECK(kb.commutators.empty());

  const NCPoly p = commutator(b * x, c * x);
  const auto kd = kernel_decompose(p);
  CHECK(kd.recombine() == p);

  const auto k0 = kernel_decompose(R.zero());
  CHECK(k0.constant.is_zero());
  CHECK(k0.commutators.empty());

  CHECK_THROWS_AS(kernel_decompose(x), NotInKernel);
}

TEST_CASE("random round trips") {
  for (int t = 0; t < 60; ++t) {
    Rng rng = stream_for(21, t);
    const AlgebraSpec alg = t % 2 ? M2 : C1;
    const NCPoly p = drop_constant(random_poly(rng, alg, 1, {1, 5, 4}));
    const NCPoly q = cyclic_derivative(p, 0);
    CHECK(is_cyclically_exact(q));
    const NCPoly p2 = antiderivative_cyclic(q);
    CHECK(cyclic_derivative(p2, 0) == q);
    CHECK(kernel_membership(p2 - p));

    const NCPoly g = drop_constant(random_poly(rng, alg, 1, {1, 5, 4}));
    const TensorPoly xi = free_diff(g, 0);
    CHECK(is_gradient_exact(xi));
    CHECK(antiderivative_grad(xi) == g);
  }
}

TEST_CASE("the three cyclic exactness conditions agree") {
  int exact = 0, inexact = 0;
  for (int t = 0; t < 120; ++t) {
    Rng rng = stream_for(22, t);
    const AlgebraSpec alg = t % 2 ? M2 : C1;
    NCPoly q = random_poly(rng, alg, 1, {0, 4, 3});
    if (t % 3 == 0) q = cyclic_derivative(random_poly(rng, alg, 1, {0, 5, 3}), 0);
    const bool a = is_cyclically_exact(q);
    const bool b = diff_symmetric(q);
    const bool c = cyclic_derivative(cyclic_divergence(q, 0), 0) == grading_op(q, 0);
    CHECK(a == b);
    CHECK(a == c);
    (a ? exact : inexact)++;
  }
  CHECK(exact > 20);
  CHECK(inexact > 20);
}

TEST_CASE("the three gradient exactness conditions agree") {
  int exact = 0, inexact = 0;
  for (int t = 0; t < 120; ++t) {
    Rng rng = stream_for(23, t);
    const AlgebraSpec alg = t % 2 ? M2 : C1;
    TensorPoly xi = random_tensor(rng, alg, 1, 3);
    if (t % 2 == 0) xi = free_diff(random_poly(rng, alg, 1), 0);
    const bool a = is_gradient_exact(xi);
    const bool b = free_diff(divergence(xi, 0), 0) == number_op2(xi, 0);
    bool c = true;
    try {
      (void)antiderivative_grad(xi);
    } catch (const NotExact&) {
      c = false;
    }
    CHECK(a == b);
    CHECK(a == c);
    (a ? exact : inexact)++;
  }
  CHECK(exact > 20);
  CHECK(inexact > 20);
}

TEST_CASE("tuples of scalar polynomials") {
  PolyRing T(C1, 2);
  const NCPoly x1 = T.x(0), x2 = T.x(1);
  const NCPoly p = x1 * x2 * x1 + Scalar(3) * x2 * x2;
  const std::vector<NCPoly> qs{cyclic_derivative(p, 0), cyclic_derivative(p, 1)};
  CHECK(is_cyclically_exact(qs));
  const NCPoly back = antiderivative_cyclic(qs);
  CHECK(cyclic_derivative(back, 0) == qs[0]);
  CHECK(cyclic_derivative(back, 1) == qs[1]);

  const std::vector<NCPoly> bad{x2, T.zero()};
  CHECK_FALSE(is_cyclically_exact(bad));
  CHECK_THROWS_AS(antiderivative_cyclic(bad), NotExact);
  const std::vector<NCPoly> short_tuple{x1};
  CHECK_THROWS_AS(is_cyclically_exact(short_tuple), std::invalid_argument);
}

TEST_CASE("kernel decomposition on random kernel elements") {
  PolyRing R(M2, 1);
  for (int t = 0; t < 40; ++t) {
    Rng rng = stream_for(24, t);
    NCPoly p = R.e(t % 2, 1);
    for (int j = 0; j < 2; ++j)
      p += commutator(random_poly(rng, M2, 1, {0, 3, 2}), random_poly(rng, M2, 1, {0, 3, 2}));
    CHECK(kernel_membership(p));
    CHECK(kernel_decompose(p).recombine() == p);
  }
}

TEST_CASE("exact sequence audit") {
  PolyRing R(M2, 1);
  const NCPoly x = R.x(0);
  const NCPoly b = R.e(0, 1);
  std::vector<NCPoly> samples{x * x * x, x, b * x - x * b};
  for (int t = 0; t < 30; ++t) {
    Rng rng = stream_for(25, t);
    samples.push_back(random_poly(rng, t % 2 ? M2 : C1, 1));
  }
  const auto report = exact_sequence_audit(samples);
  CHECK(report.ok());
  CHECK(report.samples == samples.size());
  CHECK(is_cyclically_exact(cyclic_derivative(x * x * x, 0)));
  CHECK(antiderivative_cyclic(x) == Scalar::rational(1, 2) * x * x);
  CHECK(theta_op(b * x - x * b) == Scalar(2) * (b * x - x * b));
}
