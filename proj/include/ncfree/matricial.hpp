#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ncfree/algebra.hpp"
#include "ncfree/ncpoly.hpp"
#include "ncfree/random.hpp"

// Levelwise evaluation of polynomials on M_N(C) (x) B, stored as complex
// matrices of size N*k with row index a*k + r (level index a, B index r).

namespace ncfree {

using Matrix = Eigen::MatrixXcd;

enum class EvalMode {
  /// p in B<X>, letters are matrices in M_N(B), coefficients act as I_N (x) b.
  BValued,
  /// Scalar-coefficient p, letter j is z(phi_{g(j)}) of a single beta in M_N(B).
  ZValued,
};

/// A tuple of level-N matrices over M_k. In ZValued mode it holds exactly one
/// matrix, beta.
struct MatrixPoint {
  int level = 1;
  int k = 1;
  std::vector<Matrix> mats;

  int dim() const { return level * k; }
  /// Throws std::invalid_argument when a matrix is not (N k) x (N k).
  void validate() const;
};

/// How the letters of a scalar-coefficient polynomial map to functionals in
/// ZValued mode. generator_map[j] is a 0-based index into dual_basis(k);
/// empty means letter j -> phi_{j+1}.
struct ZSetup {
  int k = 1;
  std::vector<int> generator_map;

  int functional_of(int letter) const;
};

/// Entry (a, b) is phi applied to the k x k block (a, b). Works for
/// rectangular block matrices too.
Matrix z_of(const Functional& phi, const Matrix& beta, int k);

/// Ring homomorphism from polynomials to matrices. OpenMP over terms with an
/// in-order reduction, bit-identical to eval_serial.
Matrix eval(const NCPoly& p, const MatrixPoint& pt, EvalMode mode, const ZSetup& z = {});
Matrix eval_serial(const NCPoly& p, const MatrixPoint& pt, EvalMode mode, const ZSetup& z = {});

/// Direction of a difference quotient: one n x m block (times B) per letter in
/// BValued mode, a single block Gamma in ZValued mode.
using Direction = std::vector<Matrix>;

/// Top-right block of p at [[X, Z], [0, Y]].
Matrix delta_numeric(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y, const Direction& z,
                     EvalMode mode, const ZSetup& zs = {});

/// The same block from the symbolic side: sum over letters of the free
/// difference quotient evaluated as left(X) Z right(Y).
Matrix delta_symbolic(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y, const Direction& z,
                      EvalMode mode, const ZSetup& zs = {});

/// ||symbolic - numeric||_F / max(1, ||numeric||_F)
double symbolic_vs_numeric_delta(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y,
                                 const Direction& z, EvalMode mode, const ZSetup& zs = {});

/// sum_{b,c} Tr(Delta p(pi, pi)(e_bc)) e_cb. In ZValued mode the direction is
/// e_bc (x) I_k; in BValued mode k must be 1 and only letter `var` moves.
Matrix cyclic_numeric(const NCPoly& p, const MatrixPoint& pi, EvalMode mode, const ZSetup& zs = {},
                      int var = 0);
/// The matching symbolic value: eval of the cyclic derivative (summed over all
/// letters mapped to phi_1 in ZValued mode).
Matrix cyclic_symbolic(const NCPoly& p, const MatrixPoint& pi, EvalMode mode, const ZSetup& zs = {},
                       int var = 0);

/// (1,3) block of p at [[X, Z1, 0], [0, Y, Z2], [0, 0, W]].
Matrix delta2_numeric(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y, const MatrixPoint& w,
                      const Direction& z1, const Direction& z2, EvalMode mode, const ZSetup& zs = {});

struct SecondOrderResidual {
  double via_left = 0;  // through (d (x) id) o d
  double via_right = 0; // through (id (x) d) o d
};

SecondOrderResidual symbolic_vs_numeric_delta2(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y,
                                               const MatrixPoint& w, const Direction& z1, const Direction& z2,
                                               EvalMode mode, const ZSetup& zs = {});

struct AxiomReport {
  int trials = 0;
  double max_direct_sum = 0;  // relative residual
  double max_similarity = 0;  // relative residual divided by cond(S)
  double tolerance = 1e-9;

  bool ok() const { return max_direct_sum <= tolerance && max_similarity <= tolerance; }
};

/// Samples X, Y at levels up to max_level and an invertible S; checks
/// f(X (+) Y) = f(X) (+) f(Y) and f(S X S^-1) = S f(X) S^-1.
AxiomReport check_nc_axioms(const NCPoly& p, EvalMode mode, const ZSetup& zs, std::uint64_t seed, int trials,
                            int max_level = 4, double tolerance = 1e-9);

/// Random point with every matrix of operator norm <= 1.
MatrixPoint random_point(Rng& rng, int level, int k, int count);
/// Random n x m block direction (sizes times k) with operator norm <= 1.
Matrix random_block(Rng& rng, int rows, int cols);
/// Well-conditioned invertible matrix I + 0.5 G / ||G||.
Matrix random_invertible(Rng& rng, int n);
double condition_number(const Matrix& s);

} // namespace ncfree
