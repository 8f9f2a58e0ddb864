#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncfree/calculus.hpp"
#include "ncfree/io.hpp"

using namespace ncfree;
using io::json;

TEST_CASE("polynomial documents round trip exactly") {
  for (int t = 0; t < 100; ++t) {
    Rng rng = stream_for(1, t);
    const AlgebraSpec alg = t % 2 ? AlgebraSpec::matrix(2) : AlgebraSpec::scalar();
    NCPoly p = random_poly(rng, alg, 1 + t % 3);
    p = Scalar::sqrt(2 + t % 5) * p + Scalar::imag_unit() * p;
    const json j = io::poly_to_json(p);
    const auto back = io::poly_from_json(json::parse(j.dump()));
    CHECK(back.poly == p);
    CHECK(io::poly_to_json(back.poly).dump() == j.dump());
  }
}

TEST_CASE("tensor documents round trip exactly") {
  for (int t = 0; t < 50; ++t) {
    Rng rng = stream_for(2, t);
    const TensorPoly u = random_tensor(rng, AlgebraSpec::matrix(2), 2, 3);
    CHECK(io::tensor_from_json(io::tensor_to_json(u)) == u);
  }
}

TEST_CASE("generator maps are 1-based on disk") {
  PolyRing S(AlgebraSpec::scalar(), 2);
  const json j = io::poly_to_json(S.x(0) * S.x(1), {1, 2});
  CHECK(j.at("generator_map") == json::array({2, 3}));
  CHECK(j.at("terms")[0].at("letters") == json::array({1, 2}));
  const auto back = io::poly_from_json(j);
  CHECK(back.generator_map == std::vector<int>{1, 2});
}

TEST_CASE("scalar strings") {
  const json j = json::parse(R"({
    "schema_version": 1, "algebra": {"kind": "scalar", "k": 1}, "n_vars": 1,
    "terms": [{"scalar": {"re": "1/2*sqrt2", "im": "-3/4"}, "coeff_basis_indices": [0, 0], "letters": [1]}]
  })");
  const NCPoly p = io::poly_from_json(j).poly;
  const Scalar expected = Scalar::rational(1, 2) * Scalar::sqrt(2) + Scalar::rational(-3, 4) * Scalar::imag_unit();
  CHECK(p == expected * PolyRing(AlgebraSpec::scalar(), 1).x(0));
}

TEST_CASE("malformed documents are rejected") {
  const json good = io::poly_to_json(PolyRing(AlgebraSpec::matrix(2), 1).x(0));
  auto broken = [&](auto edit) {
    json j = good;
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(io::poly_from_json(broken([](json& j) { j.erase("schema_version"); })), std::invalid_argument);
  CHECK_THROWS_AS(io::poly_from_json(broken([](json& j) { j["schema_version"] = 9; })), std::invalid_argument);
  CHECK_THROWS_AS(io::poly_from_json(broken([](json& j) { j["terms"][0]["letters"] = json::array({2}); })),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::poly_from_json(broken([](json& j) { j["terms"][0]["letters"] = json::array({0}); })),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      io::poly_from_json(broken([](json& j) { j["terms"][0]["coeff_basis_indices"] = json::array({0, 4}); })),
      std::invalid_argument);
  CHECK_THROWS_AS(io::poly_from_json(broken([](json& j) { j["terms"][0]["coeff_basis_indices"] = json::array({0}); })),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::poly_from_json(broken([](json& j) { j["algebra"]["kind"] = "ring"; })), std::invalid_argument);
  CHECK_THROWS_AS(io::poly_from_json(broken([](json& j) { j["generator_map"] = json::array({1, 2}); })),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::poly_from_json(broken([](json& j) { j["terms"][0]["scalar"]["re"] = "x"; })),
                  std::invalid_argument);
}

TEST_CASE("matrix documents") {
  Matrix m(2, 2);
  m << 1.0, std::complex<double>(0, 2), -0.5, 4.0;
  const json j = io::matrices_to_json({m}, 2, 1);
  const auto pt = io::point_from_json(j);
  CHECK(pt.level == 2);
  CHECK(pt.k == 1);
  CHECK(pt.mats.at(0) == m);

  json bad = j;
  bad["level"] = 3;
  CHECK_THROWS_AS(io::point_from_json(bad), std::invalid_argument);
  bad = j;
  bad["matrices"][0]["data"].erase(0);
  CHECK_THROWS_AS(io::matrices_from_json(bad), std::invalid_argument);

  json real_entries = j;
  real_entries["matrices"][0]["data"] = json::array({1, 2, 3, 4});
  CHECK(io::matrices_from_json(real_entries).at(0)(1, 0) == std::complex<double>(3, 0));
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/p.json"), std::invalid_argument);
}
