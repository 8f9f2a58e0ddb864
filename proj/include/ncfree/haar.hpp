#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "ncfree/matricial.hpp"

// Monte-Carlo trace moments of z(phi) words over Haar unitaries in U(N k).
// Functional indices are 0-based here (0 is the normalized trace theta).

namespace ncfree {

struct HaarConfig {
  int k = 2;
  int N = 16;
  int samples = 1000;
  std::uint64_t seed = 0;

  void validate() const;
};

struct HaarEstimate {
  std::complex<double> mean;
  double std_error = 0;
  int samples = 0;
  std::uint64_t seed = 0;
};

/// Samples in one reduction block. Blocks are summed serially and combined in
/// index order, so results do not depend on the thread count.
inline constexpr int kHaarBlock = 64;

using FunctionalWord = std::vector<int>;

Matrix sample_haar_unitary(int dim, Rng& rng);

/// (1/N) Tr[z_wi(U) z_wj(U)^*], z_w the product of z(phi_w(t)).
HaarEstimate trace_moment(const FunctionalWord& wi, const FunctionalWord& wj, const HaarConfig& cfg);
HaarEstimate trace_moment_serial(const FunctionalWord& wi, const FunctionalWord& wj, const HaarConfig& cfg);

/// Large-N value of trace_moment: 0 unless wi == wj, else k^{-(n + #theta)}.
double asymptotic_moment(const FunctionalWord& wi, const FunctionalWord& wj, int k);

/// All words of length 0..max_len over k^2 functionals, shortest first.
std::vector<FunctionalWord> all_words(int k, int max_len);

struct OrthogonalityEntry {
  FunctionalWord wi;
  FunctionalWord wj;
  HaarEstimate estimate;
  double target = 0;
  bool exact_zero = false; // length mismatch: target is 0 at every N
  bool ok = false;
};

struct OrthogonalityReport {
  HaarConfig cfg;
  double limit_band = 0.05;
  double zero_sigmas = 4.0;
  std::vector<OrthogonalityEntry> entries;

  bool ok() const;
  const OrthogonalityEntry* find(const FunctionalWord& wi, const FunctionalWord& wj) const;
};

/// Every word pair up to max_len from one shared set of samples. Exact zeros
/// use |mean| <= zero_sigmas * stderr, limits use |mean - target| <= limit_band.
OrthogonalityReport verify_orthogonality(int max_len, const HaarConfig& cfg, bool parallel = true);

struct RecoveredCoefficient {
  FunctionalWord word;
  HaarEstimate pairing;   // (1/N) Tr[f(U) z_w(U)^*]
  std::complex<double> recovered; // pairing * k^{n + #theta}
  Scalar exact;           // coefficient of p on this word
};

/// f = p evaluated in ZValued mode at Haar samples, paired with every word up
/// to max_deg.
std::vector<RecoveredCoefficient> recover_coefficients(const NCPoly& p, int max_deg, const HaarConfig& cfg,
                                                       const ZSetup& zs);

enum class InjectivityOp { Grading, Number2 };

struct InjectivityReport {
  InjectivityOp op = InjectivityOp::Grading;
  int trials = 0;
  int min_eigenvalue = 0;
  int eigen_failures = 0;  // op[p] != sum of eigenvalue * component
  int zero_images = 0;     // p != 0 with op[p] = 0
  std::vector<RecoveredCoefficient> statistical; // Grading only, when requested
  double max_recovery_error = 0;

  bool ok() const { return eigen_failures == 0 && zero_images == 0 && min_eigenvalue >= 1; }
};

/// Exact eigen-decomposition checks over random inputs; with a config, also
/// recovers the coefficients of L[p] for one random single-letter p.
InjectivityReport injectivity_evidence(InjectivityOp op, int trials, std::uint64_t seed,
                                       const std::optional<HaarConfig>& stats = std::nullopt);

} // namespace ncfree
