#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncfree/calculus.hpp"
#include "ncfree/haar.hpp"

using namespace ncfree;

TEST_CASE("Haar samples are unitary") {
  Rng rng = stream_for(1, 0);
  for (int dim : {1, 2, 5, 16, 40}) {
    const Matrix u = sample_haar_unitary(dim, rng);
    CHECK((u.adjoint() * u - Matrix::Identity(dim, dim)).norm() <= 1e-10);
  }
  const Matrix one = sample_haar_unitary(1, rng);
  CHECK(std::abs(one(0, 0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(sample_haar_unitary(0, rng), std::invalid_argument);
}

TEST_CASE("first moment of a Haar entry") {
  // E|U_11|^2 = 1/dim
  const int dim = 4, n = 10000;
  double sum = 0, sum_sq = 0;
  for (int s = 0; s < n; ++s) {
    Rng rng = stream_for(2, s);
    const double v = std::norm(sample_haar_unitary(dim, rng)(0, 0));
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / (n - 1));
  CHECK(std::abs(mean - 1.0 / dim) <= 3 * se);
}

TEST_CASE("k = 1 diagonal moment is exactly one") {
  const HaarConfig cfg{1, 8, 200, 3};
  const auto e = trace_moment({0}, {0}, cfg);
  CHECK(e.mean.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(e.mean.imag()) < 1e-12);
  CHECK(e.std_error < 1e-10);
  CHECK(e.samples == 200);
  CHECK(e.seed == 3);
}

TEST_CASE("serial and parallel moments agree bit for bit") {
  const HaarConfig cfg{2, 6, 300, 4};
  for (const auto& [wi, wj] : std::vector<std::pair<FunctionalWord, FunctionalWord>>{
           {{0}, {0}}, {{1, 2}, {1, 2}}, {{0}, {}}, {{3, 0}, {1}}}) {
    const auto a = trace_moment(wi, wj, cfg);
    const auto b = trace_moment_serial(wi, wj, cfg);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    const auto c = trace_moment(wi, wj, cfg);
    CHECK(a.mean == c.mean);
  }
  CHECK_THROWS_AS(trace_moment({4}, {0}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(trace_moment({0}, {0}, HaarConfig{2, 4, 0, 1}), std::invalid_argument);
}

TEST_CASE("large-N values") {
  CHECK(asymptotic_moment({0}, {0}, 2) == 0.25);
  CHECK(asymptotic_moment({1}, {1}, 2) == 0.5);
  CHECK(asymptotic_moment({1, 2}, {1, 2}, 2) == 0.25);
  CHECK(asymptotic_moment({0, 0}, {0, 0}, 2) == 0.0625);
  CHECK(asymptotic_moment({1}, {2}, 2) == 0.0);
  CHECK(asymptotic_moment({}, {}, 3) == 1.0);
  CHECK(asymptotic_moment({0}, {0}, 1) == 1.0);
  CHECK(all_words(2, 2).size() == 1 + 4 + 16);
  CHECK(all_words(1, 3).size() == 4);
}

TEST_CASE("orthogonality at moderate N") {
  const HaarConfig cfg{2, 32, 400, 5};
  const auto r = verify_orthogonality(1, cfg);
  CHECK(r.entries.size() == 25);
  for (const auto& e : r.entries) {
    CAPTURE(e.wi.size());
    CAPTURE(e.wj.size());
    if (e.exact_zero) CHECK(std::abs(e.estimate.mean) <= 4 * e.estimate.std_error + 1e-12);
  }
  CHECK(std::abs(r.find({0}, {0})->estimate.mean - 0.25) < 0.02);
  CHECK(std::abs(r.find({1}, {1})->estimate.mean - 0.5) < 0.02);
  CHECK(std::abs(r.find({1}, {2})->estimate.mean) < 0.02);
  CHECK(r.find({5}, {0}) == nullptr);

  const auto serial = verify_orthogonality(1, cfg, false);
  for (std::size_t i = 0; i < r.entries.size(); ++i) CHECK(r.entries[i].estimate.mean == serial.entries[i].estimate.mean);
}

TEST_CASE("coefficient recovery") {
  const HaarConfig cfg{2, 32, 200, 6};
  PolyRing S(AlgebraSpec::scalar(), 2);
  const ZSetup zs{2, {1, 2}};
  const auto recs = recover_coefficients(S.x(0) * S.x(1), 2, cfg, zs);
  CHECK(recs.size() == 21);
  for (const auto& r : recs) {
    CAPTURE(r.word.size());
    CHECK(std::abs(r.recovered - r.exact.to_complex()) < 0.1);
    if (r.word == FunctionalWord{1, 2}) CHECK(std::abs(r.pairing.mean - 0.25) < 0.025);
  }

  PolyRing T(AlgebraSpec::scalar(), 1);
  const auto ones = recover_coefficients(T.one(), 1, cfg, ZSetup{2, {0}});
  CHECK(ones.front().word.empty());
  CHECK(std::abs(ones.front().pairing.mean - 1.0) < 1e-12);
  for (std::size_t i = 1; i < ones.size(); ++i) CHECK(std::abs(ones[i].pairing.mean) < 0.05);

  const auto theta = recover_coefficients(T.x(0), 1, cfg, ZSetup{2, {0}});
  CHECK(std::abs(theta[1].pairing.mean - 0.25) < 0.02);
  CHECK(std::abs(theta[1].recovered - 1.0) < 0.1);

  CHECK_THROWS_AS(recover_coefficients(T.x(0) * T.x(0), 1, cfg, ZSetup{2, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(recover_coefficients(PolyRing(AlgebraSpec::matrix(2), 1).x(0), 1, cfg, ZSetup{2, {0}}),
                  std::invalid_argument);
}

TEST_CASE("injectivity evidence") {
  const auto g = injectivity_evidence(InjectivityOp::Grading, 100, 7);
  CHECK(g.ok());
  CHECK(g.trials == 100);
  CHECK(g.min_eigenvalue == 1);
  const auto n2 = injectivity_evidence(InjectivityOp::Number2, 100, 7);
  CHECK(n2.ok());
  CHECK(n2.min_eigenvalue >= 1);

  PolyRing S(AlgebraSpec::scalar(), 1);
  NCPoly xm = S.one();
  for (int m = 0; m <= 4; ++m) {
    CHECK(grading_op(xm, 0) == Scalar(m + 1) * xm);
    xm = xm * S.x(0);
  }

  const auto stats = injectivity_evidence(InjectivityOp::Grading, 5, 8, HaarConfig{2, 24, 150, 9});
  CHECK_FALSE(stats.statistical.empty());
  CHECK(stats.max_recovery_error < 0.3);
}
