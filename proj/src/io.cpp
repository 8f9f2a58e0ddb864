#include "ncfree/io.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace ncfree::io {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

void check_schema(const json& j) {
  require(j.is_object(), "document must be a JSON object");
  require(j.contains("schema_version"), "document has no schema_version");
  require(j.at("schema_version").get<int>() == kSchemaVersion,
          "unsupported schema_version " + j.at("schema_version").dump());
}

json scalar_to_json(const Scalar& s) { return {{"re", s.real_string()}, {"im", s.imag_string()}}; }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), "0");
  require(j.is_object() && j.contains("re"), "scalar must be {re, im}");
  return Scalar::parse(j.at("re").get<std::string>(), j.value("im", std::string("0")));
}

json word_to_json(const Word& w) {
  std::vector<int> letters;
  for (auto l : w.letters) letters.push_back(l + 1);
  return {{"coeff_basis_indices", w.coeffs}, {"letters", letters}};
}

Word word_from_json(const json& j, const AlgebraSpec& alg, int n_vars) {
  const auto coeffs = j.at("coeff_basis_indices").get<std::vector<int>>();
  const auto letters = j.value("letters", std::vector<int>{});
  require(coeffs.size() == letters.size() + 1, "word needs one more coefficient than letters");
  Word w;
  w.coeffs.clear();
  for (int c : coeffs) {
    require(c >= 0 && static_cast<std::size_t>(c) < alg.dim(),
            "coefficient basis index " + std::to_string(c) + " outside 0.." + std::to_string(alg.dim() - 1));
    w.coeffs.push_back(static_cast<std::uint16_t>(c));
  }
  for (int l : letters) {
    require(l >= 1 && l <= n_vars, "letter " + std::to_string(l) + " outside 1.." + std::to_string(n_vars));
    w.letters.push_back(static_cast<std::uint8_t>(l - 1));
  }
  return w;
}

json algebra_to_json(const AlgebraSpec& alg) {
  return {{"kind", alg.kind == AlgebraKind::Scalar ? "scalar" : "matrix"}, {"k", alg.k}};
}

AlgebraSpec algebra_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "scalar") return AlgebraSpec::scalar();
  require(kind == "matrix", "algebra kind must be scalar or matrix");
  return AlgebraSpec::matrix(j.at("k").get<int>());
}

template <std::size_t R>
json tensor_json(const PolyN<R>& t) {
  json terms = json::array();
  for (const auto& [key, c] : t.terms()) {
    json factors = json::array();
    for (const auto& w : key) factors.push_back(word_to_json(w));
    terms.push_back({{"scalar", scalar_to_json(c)}, {"factors", factors}});
  }
  return {{"schema_version", kSchemaVersion}, {"algebra", algebra_to_json(t.algebra())},
          {"n_vars", t.n_vars()}, {"rank", R}, {"terms", terms}};
}

Matrix matrix_from_json(const json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
  const auto& data = j.at("data");
  require(data.is_array() && data.size() == static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
          "matrix data must hold rows*cols entries");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const auto& e = data.at(static_cast<std::size_t>(r * cols + c));
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else {
        require(e.is_array() && e.size() == 2, "matrix entry must be a number or [re, im]");
        m(r, c) = {e[0].get<double>(), e[1].get<double>()};
      }
    }
  return m;
}

} // namespace

json poly_to_json(const NCPoly& p, const std::vector<int>& generator_map) {
  json terms = json::array();
  for (const auto& [key, c] : p.terms()) {
    json t = word_to_json(key[0]);
    t["scalar"] = scalar_to_json(c);
    terms.push_back(std::move(t));
  }
  json out{{"schema_version", kSchemaVersion}, {"algebra", algebra_to_json(p.algebra())},
           {"n_vars", p.n_vars()}, {"terms", terms}};
  if (!generator_map.empty()) {
    std::vector<int> g;
    for (int f : generator_map) g.push_back(f + 1);
    out["generator_map"] = g;
  }
  return out;
}

PolyDocument poly_from_json(const json& j) {
  check_schema(j);
  const AlgebraSpec alg = algebra_from_json(j.at("algebra"));
  const int n_vars = j.at("n_vars").get<int>();
  PolyDocument doc{NCPoly(alg, n_vars), {}};
  for (const auto& t : j.at("terms")) doc.poly.add_term({word_from_json(t, alg, n_vars)}, scalar_from_json(t.at("scalar")));
  if (j.contains("generator_map")) {
    for (int f : j.at("generator_map").get<std::vector<int>>()) {
      require(f >= 1, "generator_map entries are 1-based functional indices");
      doc.generator_map.push_back(f - 1);
    }
    require(static_cast<int>(doc.generator_map.size()) == n_vars, "generator_map needs one entry per letter");
  }
  return doc;
}

json tensor_to_json(const TensorPoly& u) { return tensor_json(u); }
json tensor_to_json(const TensorPoly3& t) { return tensor_json(t); }

TensorPoly tensor_from_json(const json& j) {
  check_schema(j);
  require(j.value("rank", 2) == 2, "expected a rank-2 tensor document");
  const AlgebraSpec alg = algebra_from_json(j.at("algebra"));
  const int n_vars = j.at("n_vars").get<int>();
  TensorPoly out(alg, n_vars);
  for (const auto& t : j.at("terms")) {
    const auto& f = t.at("factors");
    require(f.is_array() && f.size() == 2, "tensor term needs two factors");
    out.add_term({word_from_json(f[0], alg, n_vars), word_from_json(f[1], alg, n_vars)},
                 scalar_from_json(t.at("scalar")));
  }
  return out;
}

json matrices_to_json(const std::vector<Matrix>& mats, int level, int k) {
  json arr = json::array();
  for (const auto& m : mats) {
    json data = json::array();
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) data.push_back({m(r, c).real(), m(r, c).imag()});
    arr.push_back({{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}});
  }
  return {{"schema_version", kSchemaVersion}, {"level", level}, {"k", k}, {"matrices", arr}};
}

MatrixPoint point_from_json(const json& j) {
  check_schema(j);
  MatrixPoint pt{j.at("level").get<int>(), j.value("k", 1), matrices_from_json(j)};
  pt.validate();
  return pt;
}

std::vector<Matrix> matrices_from_json(const json& j) {
  check_schema(j);
  std::vector<Matrix> out;
  for (const auto& m : j.at("matrices")) out.push_back(matrix_from_json(m));
  require(!out.empty(), "matrix document holds no matrices");
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  if (path == "-" || path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << '\n';
}

} // namespace ncfree::io
