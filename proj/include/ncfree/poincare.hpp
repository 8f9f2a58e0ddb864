#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncfree/calculus.hpp"
#include "ncfree/ncpoly.hpp"

namespace ncfree {

/// No antiderivative exists for the given input.
class NotExact : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input is not in the kernel of the cyclic derivative.
class NotInKernel : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Single-letter B<X>: true iff q = delta[p] for some p, decided by
/// theta_op(q) == 0.
bool is_cyclically_exact(const NCPoly& q);
/// Scalar coefficients, one polynomial per letter: true iff there is p with
/// delta_j[p] = q_j for all j.
bool is_cyclically_exact(std::span<const NCPoly> qs);

/// Returns p with delta[p] = q, zero constant term. The candidate is built
/// degree by degree from X q and checked before returning.
NCPoly antiderivative_cyclic(const NCPoly& q);
NCPoly antiderivative_cyclic(std::span<const NCPoly> qs);

/// True iff (d (x) id)[xi] = (id (x) d)[xi] for the chosen letter.
bool is_gradient_exact(const TensorPoly& xi, int var = 0);
/// Returns g with free_diff(g, var) = xi and no var-free part.
NCPoly antiderivative_grad(const TensorPoly& xi, int var = 0);

/// delta_j[p] == 0 for every letter. For a single letter the symmetrization
/// kernel is computed too; disagreement is a logic_error.
bool kernel_membership(const NCPoly& p);

struct KernelDecomposition {
  NCPoly constant;
  std::vector<std::pair<NCPoly, NCPoly>> commutators;

  /// constant + sum [u, v]
  NCPoly recombine() const;
};

/// Writes a single-letter kernel element as b + sum [u_j, v_j]. Throws
/// NotInKernel when delta[p] != 0.
KernelDecomposition kernel_decompose(const NCPoly& p);

struct AuditReport {
  std::size_t samples = 0;
  std::size_t exact_inputs = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the exact sequence on single-letter samples: theta o delta = 0,
/// ker theta inputs integrate, non-kernel inputs are rejected, and the
/// xi o [X, .] verdicts agree with theta.
AuditReport exact_sequence_audit(std::span<const NCPoly> samples);

} // namespace ncfree
