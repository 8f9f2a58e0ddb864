#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ncfree/scalar.hpp"

namespace ncfree {

enum class AlgebraKind { Scalar, Matrix };

/// Identifies a coefficient algebra: complex scalars or M_k over exact scalars.
/// Scalar is the k == 1 case and never touches radicals.
struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::Scalar;
  int k = 1;

  static AlgebraSpec scalar() { return {}; }
  static AlgebraSpec matrix(int k);

  std::size_t dim() const { return static_cast<std::size_t>(k) * static_cast<std::size_t>(k); }

  /// Product of basis elements e_a * e_b as a basis index, or -1 when the
  /// product of matrix units vanishes.
  int fuse(int a, int b) const {
    if (k == 1) return 0;
    return (a % k == b / k) ? (a / k) * k + (b % k) : -1;
  }
  /// Basis indices whose sum is the unit (the diagonal matrix units).
  std::vector<int> unit_indices() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

std::string to_string(const AlgebraSpec& spec);

/// Element of B: a k x k matrix of exact scalars, row-major.
class CoeffElem {
public:
  CoeffElem() : CoeffElem(1) {}
  explicit CoeffElem(int k);

  static CoeffElem identity(int k);
  static CoeffElem unit(int k, int row, int col);
  static CoeffElem scalar(const Scalar& s) {
    CoeffElem e(1);
    e(0, 0) = s;
    return e;
  }

  int k() const { return k_; }
  Scalar& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r * k_ + c)]; }
  const Scalar& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r * k_ + c)];
  }
  /// Coefficient on basis element idx (matrix unit e_{idx/k, idx%k}).
  const Scalar& on_basis(int idx) const { return entries_[static_cast<std::size_t>(idx)]; }

  Scalar trace() const;
  CoeffElem transpose() const;
  CoeffElem conj() const;
  bool is_zero() const;

  CoeffElem& operator+=(const CoeffElem& o);
  friend CoeffElem operator+(CoeffElem a, const CoeffElem& b) { return a += b; }
  friend CoeffElem operator-(const CoeffElem& a, const CoeffElem& b);
  friend CoeffElem operator*(const Scalar& s, const CoeffElem& a);
  friend bool operator==(const CoeffElem&, const CoeffElem&) = default;

private:
  int k_;
  std::vector<Scalar> entries_;
};

/// Exact product in B. Throws std::invalid_argument on size mismatch.
CoeffElem coeff_mul(const CoeffElem& a, const CoeffElem& b);

/// Linear functional on B stored by its values on the matrix-unit basis.
struct Functional {
  std::vector<Scalar> values_on_basis;

  friend bool operator==(const Functional&, const Functional&) = default;
};

Scalar apply_functional(const Functional& phi, const CoeffElem& a);

/// The fixed dual basis phi_1..phi_{k^2} of M_k. phi_1 is the normalized trace;
/// phi_j(X) = Tr(X alpha_j^t) for j >= 2 where alpha_j runs over the
/// Hilbert-Schmidt-normalized generalized Gell-Mann matrices in the order
/// symmetric (r < s), antisymmetric (r < s), diagonal (l = 1..k-1).
std::vector<Functional> dual_basis(int k);

/// The matrices underlying dual_basis(k): entry 0 is k^{-1} I_k, the rest are
/// the alpha_j.
std::vector<CoeffElem> dual_basis_matrices(int k);

/// Elements beta_j with phi_i(beta_j) = delta_ij, so a = sum_j phi_j(a) beta_j.
std::vector<CoeffElem> dual_reconstruction_basis(int k);

/// Gauss-Jordan inverse over the exact scalar field. Throws std::domain_error
/// for singular input.
std::vector<std::vector<Scalar>> invert(std::vector<std::vector<Scalar>> m);

/// Canonical basis and dual-basis data of a coefficient algebra.
class CoeffAlgebra {
public:
  explicit CoeffAlgebra(AlgebraSpec spec);

  static std::shared_ptr<const CoeffAlgebra> get(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  int k() const { return spec_.k; }
  const std::vector<CoeffElem>& basis() const { return basis_; }
  const std::vector<Functional>& dual() const { return dual_; }

private:
  AlgebraSpec spec_;
  std::vector<CoeffElem> basis_;
  std::vector<Functional> dual_;
};

} // namespace ncfree
