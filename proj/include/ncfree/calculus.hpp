#pragma once

#include <span>

#include "ncfree/ncpoly.hpp"

// Differential and structural operators on B<X_1..X_n> and its tensor powers.
// Letter indices are 0-based. For the Z(B^d) picture letter 0 plays the role
// of z(theta) and the remaining letters are inert coefficients for free_diff.

namespace ncfree {

/// Free difference quotient with respect to one letter: splits every word at
/// each occurrence of that letter. All other letters behave as constants.
TensorPoly free_diff(const NCPoly& p, int var);

/// a (x) c -> c (x) a
TensorPoly flip(const TensorPoly& u);
/// a (x) c -> ac
NCPoly mul_map(const TensorPoly& u);

/// (a (x) c) # q = a q c
NCPoly sharp(const TensorPoly& u, const NCPoly& q);
/// (A (x) B (x) C) #_{1,2} q = A q B (x) C
TensorPoly sharp12(const TensorPoly3& t, const NCPoly& q);
/// (A (x) B (x) C) #_{2,3} q = A (x) B q C
TensorPoly sharp23(const TensorPoly3& t, const NCPoly& q);

/// mu o flip o free_diff
NCPoly cyclic_derivative(const NCPoly& p, int var);

/// u # X_var
NCPoly divergence(const TensorPoly& u, int var);
/// p X_var
NCPoly cyclic_divergence(const NCPoly& p, int var);

/// divergence o free_diff; scales a word by its number of X_var.
NCPoly number_op(const NCPoly& p, int var);
/// Sum of number_op over all letters; scales a word by its total degree.
NCPoly number_total(const NCPoly& p);
/// number_op + id
NCPoly grading_op(const NCPoly& p, int var);

/// free_diff applied to the first / second tensor factor.
TensorPoly3 diff_tensor_left(const TensorPoly& u, int var);
TensorPoly3 diff_tensor_right(const TensorPoly& u, int var);
/// sharp12 / sharp23 with X_var.
TensorPoly divergence_left(const TensorPoly3& t, int var);
TensorPoly divergence_right(const TensorPoly3& t, int var);
/// N (x) id and id (x) N, each built from the composite of the two maps above.
TensorPoly number_left(const TensorPoly& u, int var);
TensorPoly number_right(const TensorPoly& u, int var);
/// N (x) id + id (x) N + id
TensorPoly number_op2(const TensorPoly& u, int var);

/// delta_var[p] X_var
NCPoly symmetrization(const NCPoly& p, int var);

/// Single-letter operators. rho rotates the coefficient tuple of a word,
/// rho[b0 X b1 ... X bn] = b1 X b2 ... X bn X b0, and fixes constants.
NCPoly rho(const NCPoly& p);
/// id - rho
NCPoly theta_op(const NCPoly& p);
/// xi[b0 X b1 ... X bn] = X b1 ... X (bn b0); constants are fixed.
NCPoly xi_op(const NCPoly& p);
/// xi o [X, .]
NCPoly xi_theta(const NCPoly& p);

/// sum_j [X_j, p_j] for scalar-coefficient inputs, one per letter.
NCPoly theta_voiculescu(std::span<const NCPoly> ps);

} // namespace ncfree
