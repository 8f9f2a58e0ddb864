#include "ncfree/random.hpp"

namespace ncfree {

Rng stream_for(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Scalar random_rational(Rng& rng, int limit) {
  std::uniform_int_distribution<long> num(1, limit);
  std::uniform_int_distribution<long> den(1, limit);
  std::bernoulli_distribution neg(0.5);
  const long n = num(rng);
  return Scalar::rational(neg(rng) ? -n : n, den(rng));
}

Word random_word(Rng& rng, const AlgebraSpec& alg, int n_vars, int degree) {
  std::uniform_int_distribution<int> coeff(0, static_cast<int>(alg.dim()) - 1);
  std::uniform_int_distribution<int> letter(0, n_vars - 1);
  Word w;
  w.coeffs.clear();
  for (int i = 0; i <= degree; ++i) w.coeffs.push_back(static_cast<std::uint16_t>(coeff(rng)));
  for (int i = 0; i < degree; ++i) w.letters.push_back(static_cast<std::uint8_t>(letter(rng)));
  return w;
}

NCPoly random_poly(Rng& rng, const AlgebraSpec& alg, int n_vars, const PolyShape& shape) {
  std::uniform_int_distribution<int> terms(1, shape.max_terms);
  std::uniform_int_distribution<int> deg(shape.min_degree, shape.max_degree);
  NCPoly out(alg, n_vars);
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) out.add_term({random_word(rng, alg, n_vars, deg(rng))}, random_rational(rng));
  return out;
}

TensorPoly random_tensor(Rng& rng, const AlgebraSpec& alg, int n_vars, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  TensorPoly out(alg, n_vars);
  const int n = terms(rng);
  for (int t = 0; t < n; ++t)
    out.add_term({random_word(rng, alg, n_vars, deg(rng)), random_word(rng, alg, n_vars, deg(rng))},
                 random_rational(rng));
  return out;
}

} // namespace ncfree
