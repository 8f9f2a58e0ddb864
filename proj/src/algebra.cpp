#include "ncfree/algebra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace ncfree {

AlgebraSpec AlgebraSpec::matrix(int k) {
  if (k < 1) throw std::invalid_argument("matrix algebra needs k >= 1");
  return {AlgebraKind::Matrix, k};
}

std::vector<int> AlgebraSpec::unit_indices() const {
  std::vector<int> out;
  for (int r = 0; r < k; ++r) out.push_back(r * k + r);
  return out;
}

std::string to_string(const AlgebraSpec& spec) {
  return spec.kind == AlgebraKind::Scalar ? "scalar" : "matrix(" + std::to_string(spec.k) + ")";
}

CoeffElem::CoeffElem(int k) : k_(k), entries_(static_cast<std::size_t>(k * k)) {
  if (k < 1) throw std::invalid_argument("CoeffElem needs k >= 1");
}

CoeffElem CoeffElem::identity(int k) {
  CoeffElem e(k);
  for (int r = 0; r < k; ++r) e(r, r) = 1;
  return e;
}

CoeffElem CoeffElem::unit(int k, int row, int col) {
  if (row < 0 || col < 0 || row >= k || col >= k) throw std::out_of_range("matrix unit index");
  CoeffElem e(k);
  e(row, col) = 1;
  return e;
}

Scalar CoeffElem::trace() const {
  Scalar t;
  for (int r = 0; r < k_; ++r) t += (*this)(r, r);
  return t;
}

CoeffElem CoeffElem::transpose() const {
  CoeffElem t(k_);
  for (int r = 0; r < k_; ++r)
    for (int c = 0; c < k_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CoeffElem CoeffElem::conj() const {
  CoeffElem t(k_);
  for (std::size_t i = 0; i < entries_.size(); ++i) t.entries_[i] = entries_[i].conj();
  return t;
}

bool CoeffElem::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

CoeffElem& CoeffElem::operator+=(const CoeffElem& o) {
  if (o.k_ != k_) throw std::invalid_argument("CoeffElem dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

CoeffElem operator-(const CoeffElem& a, const CoeffElem& b) {
  return a + Scalar(-1) * b;
}

CoeffElem operator*(const Scalar& s, const CoeffElem& a) {
  CoeffElem out = a;
  for (auto& e : out.entries_) e = s * e;
  return out;
}

CoeffElem coeff_mul(const CoeffElem& a, const CoeffElem& b) {
  if (a.k() != b.k()) throw std::invalid_argument("coeff_mul: dimension mismatch");
  const int k = a.k();
  CoeffElem out(k);
  for (int r = 0; r < k; ++r)
    for (int m = 0; m < k; ++m) {
      if (a(r, m).is_zero()) continue;
      for (int c = 0; c < k; ++c)
        if (!b(m, c).is_zero()) out(r, c) += a(r, m) * b(m, c);
    }
  return out;
}

Scalar apply_functional(const Functional& phi, const CoeffElem& a) {
  if (phi.values_on_basis.size() != static_cast<std::size_t>(a.k() * a.k()))
    throw std::invalid_argument("apply_functional: dimension mismatch");
  Scalar out;
  for (int i = 0; i < a.k() * a.k(); ++i)
    if (!a.on_basis(i).is_zero()) out += phi.values_on_basis[static_cast<std::size_t>(i)] * a.on_basis(i);
  return out;
}

std::vector<CoeffElem> dual_basis_matrices(int k) {
  if (k < 1) throw std::invalid_argument("dual_basis: k >= 1");
  std::vector<CoeffElem> out;
  out.push_back(Scalar::rational(1, k) * CoeffElem::identity(k));
  const Scalar inv_sqrt2 = Scalar::rational(1, 2) * Scalar::sqrt(2);
  const Scalar i = Scalar::imag_unit();
  for (int r = 0; r < k; ++r)
    for (int s = r + 1; s < k; ++s) {
      CoeffElem m(k);
      m(r, s) = inv_sqrt2;
      m(s, r) = inv_sqrt2;
      out.push_back(m);
    }
  for (int r = 0; r < k; ++r)
    for (int s = r + 1; s < k; ++s) {
      CoeffElem m(k);
      m(r, s) = -(i * inv_sqrt2);
      m(s, r) = i * inv_sqrt2;
      out.push_back(m);
    }
  for (int l = 1; l < k; ++l) {
    // (E_11 + ... + E_ll - l E_{l+1,l+1}) / sqrt(l(l+1))
    const long norm2 = static_cast<long>(l) * (l + 1);
    const Scalar scale = Scalar::rational(1, norm2) * Scalar::sqrt(norm2);
    CoeffElem m(k);
    for (int d = 0; d < l; ++d) m(d, d) = scale;
    m(l, l) = Scalar(-l) * scale;
    out.push_back(m);
  }
  return out;
}

std::vector<Functional> dual_basis(int k) {
  std::vector<Functional> out;
  for (const auto& m : dual_basis_matrices(k)) {
    // phi(X) = Tr(X m^t) = sum_rs X_rs m_rs
    Functional phi;
    for (int idx = 0; idx < k * k; ++idx) phi.values_on_basis.push_back(m.on_basis(idx));
    out.push_back(std::move(phi));
  }
  return out;
}

std::vector<CoeffElem> dual_reconstruction_basis(int k) {
  auto mats = dual_basis_matrices(k);
  std::vector<CoeffElem> out;
  out.push_back(CoeffElem::identity(k));
  for (std::size_t j = 1; j < mats.size(); ++j) out.push_back(mats[j].conj());
  return out;
}

std::vector<std::vector<Scalar>> invert(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("invert: matrix not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("invert: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Scalar p = m[col][col].inverse();
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] *= p;
      inv[col][c] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Scalar f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

CoeffAlgebra::CoeffAlgebra(AlgebraSpec spec) : spec_(spec) {
  const int k = spec.k;
  for (int idx = 0; idx < k * k; ++idx) basis_.push_back(CoeffElem::unit(k, idx / k, idx % k));
  dual_ = dual_basis(k);
}

std::shared_ptr<const CoeffAlgebra> CoeffAlgebra::get(AlgebraSpec spec) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const CoeffAlgebra>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{static_cast<int>(spec.kind), spec.k}];
  if (!slot) slot = std::make_shared<const CoeffAlgebra>(spec);
  return slot;
}

} // namespace ncfree
