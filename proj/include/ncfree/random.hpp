#pragma once

#include <cstdint>
#include <random>

#include "ncfree/ncpoly.hpp"

namespace ncfree {

using Rng = std::mt19937_64;

/// Independent stream for item `index` of a run seeded with `seed`.
Rng stream_for(std::uint64_t seed, std::uint64_t index);

/// Small nonzero rational in [-limit, limit] with denominator <= limit.
Scalar random_rational(Rng& rng, int limit = 4);

Word random_word(Rng& rng, const AlgebraSpec& alg, int n_vars, int degree);

struct PolyShape {
  int min_degree = 0;
  int max_degree = 6;
  int max_terms = 4;
};

/// Sum of 1..max_terms random basis words with random rational weights.
NCPoly random_poly(Rng& rng, const AlgebraSpec& alg, int n_vars, const PolyShape& shape = {});
/// Random element of the tensor square with factor degrees in [0, max_degree].
TensorPoly random_tensor(Rng& rng, const AlgebraSpec& alg, int n_vars, int max_degree, int max_terms = 4);

} // namespace ncfree
