#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncfree/algebra.hpp"
#include "ncfree/scalar.hpp"

namespace ncfree {

/// Alternating monomial b_0 X_{l_1} b_1 ... X_{l_m} b_m with every b_j a
/// matrix-unit basis index. Letters are 0-based.
struct Word {
  std::vector<std::uint16_t> coeffs{0};
  std::vector<std::uint8_t> letters;

  Word() = default;
  Word(std::vector<std::uint16_t> c, std::vector<std::uint8_t> l);

  int degree() const { return static_cast<int>(letters.size()); }
  int letter_count(int letter) const;
  bool valid() const { return coeffs.size() == letters.size() + 1; }

  friend bool operator==(const Word&, const Word&) = default;
  /// Degree first, then letters, then basis indices (all lexicographic).
  friend bool operator<(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    if (a.letters != b.letters) return a.letters < b.letters;
    return a.coeffs < b.coeffs;
  }
};

/// a*b with the last coefficient of a fused to the first of b; nullopt when the
/// matrix-unit product vanishes.
std::optional<Word> fuse(const Word& a, const Word& b, const AlgebraSpec& alg);
/// a X_letter c, no fusion.
Word join_with_letter(const Word& a, int letter, const Word& c);

/// Exact linear combination of Rank-tuples of words over a fixed coefficient
/// algebra and letter count. Rank 1 is B<X_1..X_n>, rank 2 and 3 its tensor
/// square and cube. Canonical: no zero scalars, deterministic key order.
template <std::size_t Rank>
class PolyN {
public:
  using Key = std::array<Word, Rank>;
  using Terms = std::map<Key, Scalar>;

  PolyN() = default;
  PolyN(AlgebraSpec alg, int n_vars) : alg_(alg), n_vars_(n_vars) {
    if (n_vars < 1 || n_vars > 255) throw std::invalid_argument("n_vars must be in 1..255");
  }

  const AlgebraSpec& algebra() const { return alg_; }
  int n_vars() const { return n_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a key (zero when absent).
  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(const Key& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyN zero_like() const { return PolyN(alg_, n_vars_); }

  void require_compatible(const PolyN& o) const {
    if (!(alg_ == o.alg_) || n_vars_ != o.n_vars_)
      throw std::invalid_argument("algebra mismatch: " + to_string(alg_) + "/" +
                                  std::to_string(n_vars_) + " vs " + to_string(o.alg_) + "/" +
                                  std::to_string(o.n_vars_));
  }

  PolyN& operator+=(const PolyN& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  PolyN& operator-=(const PolyN& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
  friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
  PolyN operator-() const { return Scalar(-1) * *this; }
  friend PolyN operator*(const Scalar& s, const PolyN& p) {
    PolyN out = p.zero_like();
    if (s.is_zero()) return out;
    for (const auto& [k, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), k, s * c);
    return out;
  }

  friend bool operator==(const PolyN& a, const PolyN& b) {
    return a.alg_ == b.alg_ && a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

private:
  AlgebraSpec alg_;
  int n_vars_ = 1;
  Terms terms_;
};

using NCPoly = PolyN<1>;
using TensorPoly = PolyN<2>;
using TensorPoly3 = PolyN<3>;

inline const Word& word_of(const NCPoly::Key& key) { return key[0]; }

/// Raw input term: scalar times an alternating word of general coefficients.
struct RawTerm {
  Scalar scalar;
  std::vector<CoeffElem> coeffs;
  std::vector<int> letters;
};

/// Expands every coefficient over the matrix-unit basis, merges and drops
/// zeros. Throws std::invalid_argument for malformed words.
NCPoly normalize(const AlgebraSpec& alg, int n_vars, const std::vector<RawTerm>& raw);

NCPoly add(const NCPoly& p, const NCPoly& q);
NCPoly scale(const Scalar& c, const NCPoly& p);
NCPoly mul(const NCPoly& p, const NCPoly& q);
NCPoly operator*(const NCPoly& p, const NCPoly& q);
NCPoly commutator(const NCPoly& p, const NCPoly& q);

/// Total-degree components; the zero polynomial has none.
std::map<int, NCPoly> homogeneous_components(const NCPoly& p);
/// Components by the number of occurrences of one letter.
std::map<int, NCPoly> components_by_letter(const NCPoly& p, int letter);
/// Largest total degree, or nullopt for zero.
std::optional<int> degree(const NCPoly& p);

TensorPoly tensor_of(const NCPoly& p, const NCPoly& q);
TensorPoly3 tensor_of(const NCPoly& p, const NCPoly& q, const NCPoly& r);
/// Left action on the first tensor slot.
template <std::size_t R>
PolyN<R> left_act(const NCPoly& p, const PolyN<R>& u);
/// Right action on the last tensor slot.
template <std::size_t R>
PolyN<R> right_act(const PolyN<R>& u, const NCPoly& p);

TensorPoly operator*(const NCPoly& p, const TensorPoly& u);
TensorPoly operator*(const TensorPoly& u, const NCPoly& p);

/// Convenience constructors for one (algebra, n_vars) pair.
class PolyRing {
public:
  PolyRing(AlgebraSpec alg, int n_vars) : alg_(alg), n_vars_(n_vars) {}

  const AlgebraSpec& algebra() const { return alg_; }
  int n_vars() const { return n_vars_; }

  NCPoly zero() const { return NCPoly(alg_, n_vars_); }
  NCPoly one() const;
  NCPoly scalar(const Scalar& s) const { return s * one(); }
  /// The letter X_i (0-based) with unit coefficients on both sides.
  NCPoly x(int i) const;
  NCPoly coeff(const CoeffElem& b) const;
  /// Matrix unit e_{row,col} as a constant.
  NCPoly e(int row, int col) const;
  /// A single basis word.
  NCPoly word(std::vector<std::uint16_t> coeffs, std::vector<std::uint8_t> letters) const;

private:
  AlgebraSpec alg_;
  int n_vars_;
};

std::string to_string(const Word& w, const AlgebraSpec& alg);
std::string to_string(const NCPoly& p);
std::string to_string(const TensorPoly& u);
std::string to_string(const TensorPoly3& u);

} // namespace ncfree
