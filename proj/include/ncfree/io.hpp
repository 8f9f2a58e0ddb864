#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncfree/matricial.hpp"
#include "ncfree/ncpoly.hpp"

// JSON documents. Letters and functional indices are 1-based on disk and
// 0-based in memory; coefficient basis indices are 0-based everywhere.

namespace ncfree::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct PolyDocument {
  NCPoly poly;
  std::vector<int> generator_map; // 0-based functional per letter, may be empty
};

json poly_to_json(const NCPoly& p, const std::vector<int>& generator_map = {});
PolyDocument poly_from_json(const json& j);

json tensor_to_json(const TensorPoly& u);
json tensor_to_json(const TensorPoly3& t);
TensorPoly tensor_from_json(const json& j);

/// {schema_version, level, k, matrices: [{rows, cols, data: [[re, im], ...]}]},
/// data row-major.
json matrices_to_json(const std::vector<Matrix>& mats, int level, int k);
MatrixPoint point_from_json(const json& j);
/// Rectangular direction blocks; shapes are checked by the consumer.
std::vector<Matrix> matrices_from_json(const json& j);

json read_file(const std::string& path);
/// "-" writes to stdout.
void write_file(const std::string& path, const json& j);

} // namespace ncfree::io
