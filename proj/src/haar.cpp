#include "ncfree/haar.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "ncfree/calculus.hpp"

namespace ncfree {

namespace {

using cd = std::complex<double>;

struct Accumulator {
  std::vector<cd> sum;
  std::vector<double> sum_sq;

  explicit Accumulator(std::size_t width = 0) : sum(width), sum_sq(width) {}

  void add(const std::vector<cd>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      sum[i] += values[i];
      sum_sq[i] += std::norm(values[i]);
    }
  }
  void merge(const Accumulator& o) {
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += o.sum[i];
      sum_sq[i] += o.sum_sq[i];
    }
  }
};

// Runs per_sample(U) -> vector of `width` values over all samples in fixed
// blocks and returns one estimate per value.
template <class F>
std::vector<HaarEstimate> monte_carlo(const HaarConfig& cfg, std::size_t width, F per_sample, bool parallel) {
  cfg.validate();
  const int dim = cfg.N * cfg.k;
  const long blocks = (cfg.samples + kHaarBlock - 1) / kHaarBlock;
  std::vector<Accumulator> partial(static_cast<std::size_t>(blocks), Accumulator(width));
  auto run_block = [&](long b) {
    const int lo = static_cast<int>(b) * kHaarBlock;
    const int hi = std::min(cfg.samples, lo + kHaarBlock);
    for (int s = lo; s < hi; ++s) {
      Rng rng = stream_for(cfg.seed, static_cast<std::uint64_t>(s));
      partial[static_cast<std::size_t>(b)].add(per_sample(sample_haar_unitary(dim, rng)));
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long b = 0; b < blocks; ++b) run_block(b);
  } else {
    for (long b = 0; b < blocks; ++b) run_block(b);
  }
  Accumulator total(width);
  for (const auto& a : partial) total.merge(a);

  const double n = cfg.samples;
  std::vector<HaarEstimate> out(width);
  for (std::size_t i = 0; i < width; ++i) {
    HaarEstimate& e = out[i];
    e.mean = total.sum[i] / n;
    e.samples = cfg.samples;
    e.seed = cfg.seed;
    if (cfg.samples > 1) {
      const double var = std::max(0.0, (total.sum_sq[i] - n * std::norm(e.mean)) / (n - 1));
      e.std_error = std::sqrt(var / n);
    }
  }
  return out;
}

std::vector<Matrix> z_images(const Matrix& u, int k) {
  std::vector<Matrix> out;
  for (const auto& phi : dual_basis(k)) out.push_back(z_of(phi, u, k));
  return out;
}

Matrix word_product(const FunctionalWord& w, const std::vector<Matrix>& z, int n) {
  Matrix m = Matrix::Identity(n, n);
  for (int f : w) m = m * z[static_cast<std::size_t>(f)];
  return m;
}

// (1/N) Tr[a b^*]
cd pairing(const Matrix& a, const Matrix& b) {
  return a.cwiseProduct(b.conjugate()).sum() / static_cast<double>(a.rows());
}

void check_word(const FunctionalWord& w, int k) {
  for (int f : w)
    if (f < 0 || f >= k * k) throw std::invalid_argument("functional index outside 1..k^2");
}

HaarEstimate moment(const FunctionalWord& wi, const FunctionalWord& wj, const HaarConfig& cfg, bool parallel) {
  check_word(wi, cfg.k);
  check_word(wj, cfg.k);
  auto f = [&](const Matrix& u) {
    const auto z = z_images(u, cfg.k);
    return std::vector<cd>{pairing(word_product(wi, z, cfg.N), word_product(wj, z, cfg.N))};
  };
  return monte_carlo(cfg, 1, f, parallel).front();
}

// z_w for every word in `words`, reusing the product of the prefix.
std::vector<Matrix> all_products(const std::vector<FunctionalWord>& words, const std::vector<Matrix>& z, int n) {
  std::map<FunctionalWord, std::size_t> index;
  std::vector<Matrix> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    if (w.empty()) {
      out.push_back(Matrix::Identity(n, n));
    } else {
      const FunctionalWord prefix(w.begin(), w.end() - 1);
      const auto it = index.find(prefix);
      const Matrix base = it != index.end() ? out[it->second] : word_product(prefix, z, n);
      out.push_back(base * z[static_cast<std::size_t>(w.back())]);
    }
    index.emplace(w, out.size() - 1);
  }
  return out;
}

} // namespace

void HaarConfig::validate() const {
  if (k < 1 || N < 1 || samples < 1) throw std::invalid_argument("haar config: k, N and samples must be positive");
}

Matrix sample_haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("sample_haar_unitary: dim must be positive");
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) {
      const double re = g(rng);
      const double im = g(rng);
      m(r, c) = cd(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int i = 0; i < dim; ++i) {
    const cd d = r(i, i);
    const double a = std::abs(d);
    if (a > 0) q.col(i) *= d / a;
  }
  return q;
}

HaarEstimate trace_moment(const FunctionalWord& wi, const FunctionalWord& wj, const HaarConfig& cfg) {
  return moment(wi, wj, cfg, true);
}

HaarEstimate trace_moment_serial(const FunctionalWord& wi, const FunctionalWord& wj, const HaarConfig& cfg) {
  return moment(wi, wj, cfg, false);
}

double asymptotic_moment(const FunctionalWord& wi, const FunctionalWord& wj, int k) {
  if (wi != wj) return 0.0;
  long thetas = 0;
  for (int f : wi) thetas += f == 0;
  return std::pow(static_cast<double>(k), -static_cast<double>(static_cast<long>(wi.size()) + thetas));
}

std::vector<FunctionalWord> all_words(int k, int max_len) {
  std::vector<FunctionalWord> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int f = 0; f < k * k; ++f) {
        FunctionalWord w = out[i];
        w.push_back(f);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

bool OrthogonalityReport::ok() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

const OrthogonalityEntry* OrthogonalityReport::find(const FunctionalWord& wi, const FunctionalWord& wj) const {
  for (const auto& e : entries)
    if (e.wi == wi && e.wj == wj) return &e;
  return nullptr;
}

OrthogonalityReport verify_orthogonality(int max_len, const HaarConfig& cfg, bool parallel) {
  const auto words = all_words(cfg.k, max_len);
  const std::size_t w = words.size();
  auto f = [&](const Matrix& u) {
    const auto prods = all_products(words, z_images(u, cfg.k), cfg.N);
    std::vector<cd> vals(w * w);
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j) vals[i * w + j] = pairing(prods[i], prods[j]);
    return vals;
  };
  const auto est = monte_carlo(cfg, w * w, f, parallel);

  OrthogonalityReport report;
  report.cfg = cfg;
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < w; ++j) {
      OrthogonalityEntry e{words[i], words[j], est[i * w + j], asymptotic_moment(words[i], words[j], cfg.k),
                           words[i].size() != words[j].size(), false};
      e.ok = e.exact_zero ? std::abs(e.estimate.mean) <= report.zero_sigmas * e.estimate.std_error + 1e-12
                          : std::abs(e.estimate.mean - e.target) <= report.limit_band;
      report.entries.push_back(std::move(e));
    }
  return report;
}

std::vector<RecoveredCoefficient> recover_coefficients(const NCPoly& p, int max_deg, const HaarConfig& cfg,
                                                       const ZSetup& zs) {
  if (p.algebra().k != 1) throw std::invalid_argument("recover_coefficients needs scalar coefficients");
  if (zs.k != cfg.k) throw std::invalid_argument("recover_coefficients: functional k does not match the config");
  const auto d = degree(p);
  if (d && *d > max_deg) throw std::invalid_argument("recover_coefficients: polynomial degree exceeds max_deg");

  std::map<FunctionalWord, Scalar> exact;
  for (const auto& [key, c] : p.terms()) {
    FunctionalWord w;
    for (auto l : key[0].letters) w.push_back(zs.functional_of(l));
    auto [it, fresh] = exact.emplace(w, c);
    if (!fresh) it->second = it->second + c;
  }

  const auto words = all_words(cfg.k, max_deg);
  auto f = [&](const Matrix& u) {
    const auto prods = all_products(words, z_images(u, cfg.k), cfg.N);
    const Matrix fu = eval_serial(p, MatrixPoint{cfg.N, cfg.k, {u}}, EvalMode::ZValued, zs);
    std::vector<cd> vals;
    for (const auto& m : prods) vals.push_back(pairing(fu, m));
    return vals;
  };
  const auto est = monte_carlo(cfg, words.size(), f, true);

  std::vector<RecoveredCoefficient> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto it = exact.find(words[i]);
    out.push_back({words[i], est[i], est[i].mean / asymptotic_moment(words[i], words[i], cfg.k),
                   it != exact.end() ? it->second : Scalar(0)});
  }
  return out;
}

InjectivityReport injectivity_evidence(InjectivityOp op, int trials, std::uint64_t seed,
                                       const std::optional<HaarConfig>& stats) {
  InjectivityReport report;
  report.op = op;
  report.min_eigenvalue = 1 << 30;
  for (int t = 0; t < trials; ++t) {
    Rng rng = stream_for(seed, static_cast<std::uint64_t>(t));
    const AlgebraSpec alg = t % 2 == 0 ? AlgebraSpec::scalar() : AlgebraSpec::matrix(2);
    if (op == InjectivityOp::Grading) {
      const NCPoly p = random_poly(rng, alg, 1);
      NCPoly expected = p.zero_like();
      for (const auto& [deg, comp] : homogeneous_components(p)) {
        expected += Scalar(deg + 1) * comp;
        report.min_eigenvalue = std::min(report.min_eigenvalue, deg + 1);
      }
      const NCPoly image = grading_op(p, 0);
      report.eigen_failures += !(image == expected);
      report.zero_images += !p.is_zero() && image.is_zero();
    } else {
      const TensorPoly u = random_tensor(rng, alg, 1, 5);
      TensorPoly expected = u.zero_like();
      for (const auto& [key, c] : u.terms()) {
        const int ev = static_cast<int>(key[0].letters.size() + key[1].letters.size()) + 1;
        expected.add_term(key, Scalar(ev) * c);
        report.min_eigenvalue = std::min(report.min_eigenvalue, ev);
      }
      const TensorPoly image = number_op2(u, 0);
      report.eigen_failures += !(image == expected);
      report.zero_images += !u.is_zero() && image.is_zero();
    }
    ++report.trials;
  }
  if (report.trials == 0) report.min_eigenvalue = 1;

  if (stats && op == InjectivityOp::Grading) {
    Rng rng = stream_for(seed, static_cast<std::uint64_t>(trials));
    const NCPoly p = random_poly(rng, AlgebraSpec::scalar(), 1, PolyShape{0, 2, 3});
    const ZSetup zs{stats->k, {0}};
    report.statistical = recover_coefficients(grading_op(p, 0), 2, *stats, zs);
    for (const auto& r : report.statistical)
      report.max_recovery_error = std::max(report.max_recovery_error, std::abs(r.recovered - r.exact.to_complex()));
  }
  return report;
}

} // namespace ncfree
