#include "ncfree/ncpoly.hpp"

#include <sstream>

namespace ncfree {

Word::Word(std::vector<std::uint16_t> c, std::vector<std::uint8_t> l)
    : coeffs(std::move(c)), letters(std::move(l)) {
  if (!valid()) throw std::invalid_argument("word needs exactly one more coefficient than letters");
}

int Word::letter_count(int letter) const {
  int n = 0;
  for (auto l : letters) n += (l == letter);
  return n;
}

std::optional<Word> fuse(const Word& a, const Word& b, const AlgebraSpec& alg) {
  const int joined = alg.fuse(a.coeffs.back(), b.coeffs.front());
  if (joined < 0) return std::nullopt;
  Word out;
  out.coeffs.clear();
  out.coeffs.reserve(a.coeffs.size() + b.coeffs.size() - 1);
  out.coeffs.insert(out.coeffs.end(), a.coeffs.begin(), a.coeffs.end() - 1);
  out.coeffs.push_back(static_cast<std::uint16_t>(joined));
  out.coeffs.insert(out.coeffs.end(), b.coeffs.begin() + 1, b.coeffs.end());
  out.letters.reserve(a.letters.size() + b.letters.size());
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word join_with_letter(const Word& a, int letter, const Word& c) {
  Word out;
  out.coeffs = a.coeffs;
  out.coeffs.insert(out.coeffs.end(), c.coeffs.begin(), c.coeffs.end());
  out.letters = a.letters;
  out.letters.push_back(static_cast<std::uint8_t>(letter));
  out.letters.insert(out.letters.end(), c.letters.begin(), c.letters.end());
  return out;
}

NCPoly normalize(const AlgebraSpec& alg, int n_vars, const std::vector<RawTerm>& raw) {
  NCPoly out(alg, n_vars);
  const int k = alg.k;
  for (const auto& t : raw) {
    if (t.coeffs.size() != t.letters.size() + 1)
      throw std::invalid_argument("malformed word: coefficient/letter count mismatch");
    for (int l : t.letters)
      if (l < 0 || l >= n_vars) throw std::invalid_argument("malformed word: letter out of range");
    for (const auto& c : t.coeffs)
      if (c.k() != k) throw std::invalid_argument("malformed word: coefficient size mismatch");
    if (t.scalar.is_zero()) continue;

    // Multiply out the basis expansion of every coefficient slot.
    std::vector<std::pair<std::vector<std::uint16_t>, Scalar>> partial{{{}, t.scalar}};
    for (const auto& c : t.coeffs) {
      std::vector<std::pair<std::vector<std::uint16_t>, Scalar>> next;
      for (int idx = 0; idx < k * k; ++idx) {
        const Scalar& v = c.on_basis(idx);
        if (v.is_zero()) continue;
        for (const auto& [prefix, s] : partial) {
          auto w = prefix;
          w.push_back(static_cast<std::uint16_t>(idx));
          next.emplace_back(std::move(w), s * v);
        }
      }
      partial = std::move(next);
    }
    std::vector<std::uint8_t> letters(t.letters.begin(), t.letters.end());
    for (auto& [coeffs, s] : partial) out.add_term({Word(std::move(coeffs), letters)}, s);
  }
  return out;
}

NCPoly add(const NCPoly& p, const NCPoly& q) { return p + q; }
NCPoly scale(const Scalar& c, const NCPoly& p) { return c * p; }

NCPoly mul(const NCPoly& p, const NCPoly& q) {
  p.require_compatible(q);
  NCPoly out = p.zero_like();
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms())
      if (auto w = fuse(kp[0], kq[0], p.algebra())) out.add_term({std::move(*w)}, cp * cq);
  return out;
}

NCPoly operator*(const NCPoly& p, const NCPoly& q) { return mul(p, q); }

NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

std::map<int, NCPoly> homogeneous_components(const NCPoly& p) {
  std::map<int, NCPoly> out;
  for (const auto& [key, c] : p.terms()) {
    auto [it, _] = out.try_emplace(key[0].degree(), p.zero_like());
    it->second.add_term(key, c);
  }
  return out;
}

std::map<int, NCPoly> components_by_letter(const NCPoly& p, int letter) {
  std::map<int, NCPoly> out;
  for (const auto& [key, c] : p.terms()) {
    auto [it, _] = out.try_emplace(key[0].letter_count(letter), p.zero_like());
    it->second.add_term(key, c);
  }
  return out;
}

std::optional<int> degree(const NCPoly& p) {
  if (p.is_zero()) return std::nullopt;
  // Keys are ordered by degree first.
  return p.terms().rbegin()->first[0].degree();
}

TensorPoly tensor_of(const NCPoly& p, const NCPoly& q) {
  p.require_compatible(q);
  TensorPoly out(p.algebra(), p.n_vars());
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) out.add_term({kp[0], kq[0]}, cp * cq);
  return out;
}

TensorPoly3 tensor_of(const NCPoly& p, const NCPoly& q, const NCPoly& r) {
  p.require_compatible(q);
  p.require_compatible(r);
  TensorPoly3 out(p.algebra(), p.n_vars());
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms())
      for (const auto& [kr, cr] : r.terms()) out.add_term({kp[0], kq[0], kr[0]}, cp * cq * cr);
  return out;
}

template <std::size_t R>
PolyN<R> left_act(const NCPoly& p, const PolyN<R>& u) {
  if (!(p.algebra() == u.algebra()) || p.n_vars() != u.n_vars())
    throw std::invalid_argument("left_act: algebra mismatch");
  PolyN<R> out = u.zero_like();
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [ku, cu] : u.terms())
      if (auto w = fuse(kp[0], ku[0], u.algebra())) {
        auto key = ku;
        key[0] = std::move(*w);
        out.add_term(key, cp * cu);
      }
  return out;
}

template <std::size_t R>
PolyN<R> right_act(const PolyN<R>& u, const NCPoly& p) {
  if (!(p.algebra() == u.algebra()) || p.n_vars() != u.n_vars())
    throw std::invalid_argument("right_act: algebra mismatch");
  PolyN<R> out = u.zero_like();
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kp, cp] : p.terms())
      if (auto w = fuse(ku[R - 1], kp[0], u.algebra())) {
        auto key = ku;
        key[R - 1] = std::move(*w);
        out.add_term(key, cu * cp);
      }
  return out;
}

template PolyN<1> left_act(const NCPoly&, const PolyN<1>&);
template PolyN<2> left_act(const NCPoly&, const PolyN<2>&);
template PolyN<3> left_act(const NCPoly&, const PolyN<3>&);
template PolyN<1> right_act(const PolyN<1>&, const NCPoly&);
template PolyN<2> right_act(const PolyN<2>&, const NCPoly&);
template PolyN<3> right_act(const PolyN<3>&, const NCPoly&);

TensorPoly operator*(const NCPoly& p, const TensorPoly& u) { return left_act(p, u); }
TensorPoly operator*(const TensorPoly& u, const NCPoly& p) { return right_act(u, p); }

NCPoly PolyRing::one() const {
  NCPoly out = zero();
  for (int idx : alg_.unit_indices()) out.add_term({Word({static_cast<std::uint16_t>(idx)}, {})}, 1);
  return out;
}

NCPoly PolyRing::x(int i) const {
  if (i < 0 || i >= n_vars_) throw std::out_of_range("letter index out of range");
  NCPoly out = zero();
  for (int a : alg_.unit_indices())
    for (int b : alg_.unit_indices())
      out.add_term({Word({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)},
                         {static_cast<std::uint8_t>(i)})},
                   1);
  return out;
}

NCPoly PolyRing::coeff(const CoeffElem& b) const {
  return normalize(alg_, n_vars_, {RawTerm{Scalar(1), {b}, {}}});
}

NCPoly PolyRing::e(int row, int col) const { return coeff(CoeffElem::unit(alg_.k, row, col)); }

NCPoly PolyRing::word(std::vector<std::uint16_t> coeffs, std::vector<std::uint8_t> letters) const {
  for (auto c : coeffs)
    if (c >= alg_.dim()) throw std::out_of_range("basis index out of range");
  for (auto l : letters)
    if (l >= n_vars_) throw std::out_of_range("letter index out of range");
  NCPoly out = zero();
  out.add_term({Word(std::move(coeffs), std::move(letters))}, 1);
  return out;
}

std::string to_string(const Word& w, const AlgebraSpec& alg) {
  std::ostringstream os;
  auto coeff = [&](std::uint16_t c) {
    if (alg.k == 1) return std::string();
    return "e" + std::to_string(c / alg.k + 1) + std::to_string(c % alg.k + 1);
  };
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
    os << coeff(w.coeffs[i]);
    if (i < w.letters.size()) os << "X" << static_cast<int>(w.letters[i]) + 1;
  }
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

namespace {
template <std::size_t R>
std::string render(const PolyN<R>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (std::size_t i = 0; i < R; ++i) os << (i ? " (x) " : " ") << to_string(key[i], p.algebra());
  }
  return os.str();
}
} // namespace

std::string to_string(const NCPoly& p) { return render(p); }
std::string to_string(const TensorPoly& u) { return render(u); }
std::string to_string(const TensorPoly3& u) { return render(u); }

} // namespace ncfree
