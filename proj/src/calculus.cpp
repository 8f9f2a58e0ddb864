#include "ncfree/calculus.hpp"

#include <stdexcept>

namespace ncfree {

namespace {

void check_var(int n_vars, int var) {
  if (var < 0 || var >= n_vars)
    throw std::out_of_range("letter " + std::to_string(var) + " out of range for " +
                            std::to_string(n_vars) + " variables");
}

void require_single_letter(const NCPoly& p, const char* op) {
  if (p.n_vars() != 1) throw std::invalid_argument(std::string(op) + " needs a single-letter polynomial");
}

// Every cut of w at an occurrence of var: (left, right).
template <class F>
void for_each_cut(const Word& w, int var, F&& f) {
  for (std::size_t t = 0; t < w.letters.size(); ++t) {
    if (w.letters[t] != var) continue;
    Word left;
    left.coeffs.assign(w.coeffs.begin(), w.coeffs.begin() + static_cast<long>(t) + 1);
    left.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(t));
    Word right;
    right.coeffs.assign(w.coeffs.begin() + static_cast<long>(t) + 1, w.coeffs.end());
    right.letters.assign(w.letters.begin() + static_cast<long>(t) + 1, w.letters.end());
    f(std::move(left), std::move(right));
  }
}

PolyRing ring_of(const NCPoly& p) { return PolyRing(p.algebra(), p.n_vars()); }

} // namespace

TensorPoly free_diff(const NCPoly& p, int var) {
  check_var(p.n_vars(), var);
  TensorPoly out(p.algebra(), p.n_vars());
  for (const auto& [key, c] : p.terms())
    for_each_cut(key[0], var, [&](Word l, Word r) { out.add_term({std::move(l), std::move(r)}, c); });
  return out;
}

TensorPoly flip(const TensorPoly& u) {
  TensorPoly out = u.zero_like();
  for (const auto& [key, c] : u.terms()) out.add_term({key[1], key[0]}, c);
  return out;
}

NCPoly mul_map(const TensorPoly& u) {
  NCPoly out(u.algebra(), u.n_vars());
  for (const auto& [key, c] : u.terms())
    if (auto w = fuse(key[0], key[1], u.algebra())) out.add_term({std::move(*w)}, c);
  return out;
}

NCPoly sharp(const TensorPoly& u, const NCPoly& q) {
  if (!(u.algebra() == q.algebra()) || u.n_vars() != q.n_vars())
    throw std::invalid_argument("sharp: algebra mismatch");
  NCPoly out(u.algebra(), u.n_vars());
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kq, cq] : q.terms())
      if (auto aq = fuse(ku[0], kq[0], u.algebra()))
        if (auto aqc = fuse(*aq, ku[1], u.algebra())) out.add_term({std::move(*aqc)}, cu * cq);
  return out;
}

TensorPoly sharp12(const TensorPoly3& t, const NCPoly& q) {
  if (!(t.algebra() == q.algebra()) || t.n_vars() != q.n_vars())
    throw std::invalid_argument("sharp12: algebra mismatch");
  TensorPoly out(t.algebra(), t.n_vars());
  for (const auto& [kt, ct] : t.terms())
    for (const auto& [kq, cq] : q.terms())
      if (auto aq = fuse(kt[0], kq[0], t.algebra()))
        if (auto aqb = fuse(*aq, kt[1], t.algebra())) out.add_term({std::move(*aqb), kt[2]}, ct * cq);
  return out;
}

TensorPoly sharp23(const TensorPoly3& t, const NCPoly& q) {
  if (!(t.algebra() == q.algebra()) || t.n_vars() != q.n_vars())
    throw std::invalid_argument("sharp23: algebra mismatch");
  TensorPoly out(t.algebra(), t.n_vars());
  for (const auto& [kt, ct] : t.terms())
    for (const auto& [kq, cq] : q.terms())
      if (auto bq = fuse(kt[1], kq[0], t.algebra()))
        if (auto bqc = fuse(*bq, kt[2], t.algebra())) out.add_term({kt[0], std::move(*bqc)}, ct * cq);
  return out;
}

NCPoly cyclic_derivative(const NCPoly& p, int var) { return mul_map(flip(free_diff(p, var))); }

NCPoly divergence(const TensorPoly& u, int var) {
  check_var(u.n_vars(), var);
  return sharp(u, PolyRing(u.algebra(), u.n_vars()).x(var));
}

NCPoly cyclic_divergence(const NCPoly& p, int var) {
  check_var(p.n_vars(), var);
  return p * ring_of(p).x(var);
}

NCPoly number_op(const NCPoly& p, int var) { return divergence(free_diff(p, var), var); }

NCPoly number_total(const NCPoly& p) {
  NCPoly out = p.zero_like();
  for (int i = 0; i < p.n_vars(); ++i) out += number_op(p, i);
  return out;
}

NCPoly grading_op(const NCPoly& p, int var) { return number_op(p, var) + p; }

TensorPoly3 diff_tensor_left(const TensorPoly& u, int var) {
  check_var(u.n_vars(), var);
  TensorPoly3 out(u.algebra(), u.n_vars());
  for (const auto& [key, c] : u.terms())
    for_each_cut(key[0], var, [&](Word l, Word r) { out.add_term({std::move(l), std::move(r), key[1]}, c); });
  return out;
}

TensorPoly3 diff_tensor_right(const TensorPoly& u, int var) {
  check_var(u.n_vars(), var);
  TensorPoly3 out(u.algebra(), u.n_vars());
  for (const auto& [key, c] : u.terms())
    for_each_cut(key[1], var, [&](Word l, Word r) { out.add_term({key[0], std::move(l), std::move(r)}, c); });
  return out;
}

TensorPoly divergence_left(const TensorPoly3& t, int var) {
  check_var(t.n_vars(), var);
  return sharp12(t, PolyRing(t.algebra(), t.n_vars()).x(var));
}

TensorPoly divergence_right(const TensorPoly3& t, int var) {
  check_var(t.n_vars(), var);
  return sharp23(t, PolyRing(t.algebra(), t.n_vars()).x(var));
}

TensorPoly number_left(const TensorPoly& u, int var) {
  return divergence_left(diff_tensor_left(u, var), var);
}

TensorPoly number_right(const TensorPoly& u, int var) {
  return divergence_right(diff_tensor_right(u, var), var);
}

TensorPoly number_op2(const TensorPoly& u, int var) {
  return number_left(u, var) + number_right(u, var) + u;
}

NCPoly symmetrization(const NCPoly& p, int var) {
  return cyclic_derivative(p, var) * ring_of(p).x(var);
}

NCPoly rho(const NCPoly& p) {
  require_single_letter(p, "rho");
  NCPoly out = p.zero_like();
  for (const auto& [key, c] : p.terms()) {
    Word w = key[0];
    if (w.degree() > 0) {
      const auto first = w.coeffs.front();
      w.coeffs.erase(w.coeffs.begin());
      w.coeffs.push_back(first);
    }
    out.add_term({std::move(w)}, c);
  }
  return out;
}

NCPoly theta_op(const NCPoly& p) { return p - rho(p); }

NCPoly xi_op(const NCPoly& p) {
  require_single_letter(p, "xi_op");
  const AlgebraSpec& alg = p.algebra();
  NCPoly out = p.zero_like();
  for (const auto& [key, c] : p.terms()) {
    const Word& w = key[0];
    if (w.degree() == 0) {
      out.add_term(key, c);
      continue;
    }
    const int tail = alg.fuse(w.coeffs.back(), w.coeffs.front());
    if (tail < 0) continue;
    // Result layout [1, b1, ..., b_{n-1}, bn*b0]; the leading unit expands
    // over the diagonal matrix units.
    for (int u : alg.unit_indices()) {
      Word v = w;
      v.coeffs.front() = static_cast<std::uint16_t>(u);
      v.coeffs.back() = static_cast<std::uint16_t>(tail);
      out.add_term({std::move(v)}, c);
    }
  }
  return out;
}

NCPoly xi_theta(const NCPoly& p) {
  require_single_letter(p, "xi_theta");
  return xi_op(commutator(ring_of(p).x(0), p));
}

NCPoly theta_voiculescu(std::span<const NCPoly> ps) {
  if (ps.empty()) throw std::invalid_argument("theta_voiculescu: empty tuple");
  const NCPoly& first = ps.front();
  if (first.algebra().k != 1) throw std::invalid_argument("theta_voiculescu needs scalar coefficients");
  if (static_cast<int>(ps.size()) != first.n_vars())
    throw std::invalid_argument("theta_voiculescu: tuple length must equal n_vars");
  PolyRing ring(first.algebra(), first.n_vars());
  NCPoly out = ring.zero();
  for (int j = 0; j < first.n_vars(); ++j) {
    first.require_compatible(ps[static_cast<std::size_t>(j)]);
    out += commutator(ring.x(j), ps[static_cast<std::size_t>(j)]);
  }
  return out;
}

} // namespace ncfree
