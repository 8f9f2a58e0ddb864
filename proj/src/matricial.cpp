#include "ncfree/matricial.hpp"

#include <stdexcept>
#include <string>

#include "ncfree/calculus.hpp"

namespace ncfree {

namespace {

using cd = std::complex<double>;

// Letter images plus the size of the coefficient factor (k in BValued mode,
// 1 in ZValued mode where coefficients are scalars).
struct Images {
  std::vector<Matrix> letters;
  int level = 1;
  int kc = 1;

  int dim() const { return level * kc; }
};

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

// (I_level (x) e_rs) M: row a*k+r of the result is row a*k+s of M.
Matrix unit_left(const Matrix& m, int idx, int k, int level) {
  if (k == 1) return m;
  const int r = idx / k;
  const int s = idx % k;
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (int a = 0; a < level; ++a) out.row(a * k + r) = m.row(a * k + s);
  return out;
}

// M (I_level (x) e_rs): column a*k+s of the result is column a*k+r of M.
Matrix unit_right(const Matrix& m, int idx, int k, int level) {
  if (k == 1) return m;
  const int r = idx / k;
  const int s = idx % k;
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (int a = 0; a < level; ++a) out.col(a * k + s) = m.col(a * k + r);
  return out;
}

Matrix eval_word(const Word& w, const Images& im) {
  Matrix m = unit_left(Matrix::Identity(im.dim(), im.dim()), w.coeffs[0], im.kc, im.level);
  for (std::size_t t = 0; t < w.letters.size(); ++t) {
    m = m * im.letters[w.letters[t]];
    m = unit_right(m, w.coeffs[t + 1], im.kc, im.level);
  }
  return m;
}

Images images_for(const NCPoly& p, const MatrixPoint& pt, EvalMode mode, const ZSetup& zs) {
  pt.validate();
  Images im;
  im.level = pt.level;
  if (mode == EvalMode::BValued) {
    require(p.algebra().k == pt.k, "eval: point k does not match the coefficient algebra");
    require(static_cast<int>(pt.mats.size()) == p.n_vars(), "eval: need one matrix per letter");
    im.kc = pt.k;
    im.letters = pt.mats;
  } else {
    require(p.algebra().k == 1, "ZValued evaluation needs scalar coefficients");
    require(pt.mats.size() == 1, "ZValued evaluation needs a single point beta");
    require(zs.k == pt.k, "ZValued evaluation: functional k does not match the point");
    const auto duals = dual_basis(zs.k);
    im.kc = 1;
    for (int j = 0; j < p.n_vars(); ++j)
      im.letters.push_back(z_of(duals[static_cast<std::size_t>(zs.functional_of(j))], pt.mats[0], pt.k));
  }
  return im;
}

std::vector<Matrix> direction_images(const NCPoly& p, const Direction& z, EvalMode mode, const ZSetup& zs) {
  if (mode == EvalMode::BValued) {
    require(static_cast<int>(z.size()) == p.n_vars(), "direction: need one block per letter");
    return z;
  }
  require(z.size() == 1, "ZValued direction must be a single block");
  const auto duals = dual_basis(zs.k);
  std::vector<Matrix> out;
  for (int j = 0; j < p.n_vars(); ++j)
    out.push_back(z_of(duals[static_cast<std::size_t>(zs.functional_of(j))], z[0], zs.k));
  return out;
}

Matrix block_upper(const Matrix& a, const Matrix& z, const Matrix& b) {
  require(z.rows() == a.rows() && z.cols() == b.cols(), "block point: direction has the wrong shape");
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.topRightCorner(z.rows(), z.cols()) = z;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Matrix block_upper3(const Matrix& a, const Matrix& z1, const Matrix& b, const Matrix& z2, const Matrix& c) {
  const auto n = a.rows(), m = b.rows(), l = c.rows();
  require(z1.rows() == n && z1.cols() == m && z2.rows() == m && z2.cols() == l,
          "block point: direction has the wrong shape");
  Matrix out = Matrix::Zero(n + m + l, n + m + l);
  out.block(0, 0, n, n) = a;
  out.block(0, n, n, m) = z1;
  out.block(n, n, m, m) = b;
  out.block(n, n + m, m, l) = z2;
  out.block(n + m, n + m, l, l) = c;
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Matrix kron_identity(const Matrix& s, int k) {
  Matrix out = Matrix::Zero(s.rows() * k, s.cols() * k);
  for (int a = 0; a < s.rows(); ++a)
    for (int b = 0; b < s.cols(); ++b)
      for (int r = 0; r < k; ++r) out(a * k + r, b * k + r) = s(a, b);
  return out;
}

double relative(const Matrix& diff, const Matrix& ref) {
  return diff.norm() / std::max(1.0, ref.norm());
}

double op_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix ginibre(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      const double re = g(rng);
      const double im = g(rng);
      m(r, c) = cd(re, im);
    }
  return m;
}

Matrix scaled_to_unit_ball(Rng& rng, Matrix m) {
  std::uniform_real_distribution<double> u(0.5, 1.0);
  const double n = op_norm(m);
  return n > 0 ? Matrix(m * (u(rng) / n)) : m;
}

} // namespace

void MatrixPoint::validate() const {
  require(level >= 1 && k >= 1, "matrix point: level and k must be positive");
  for (const auto& m : mats)
    require(m.rows() == dim() && m.cols() == dim(),
            "matrix point: expected " + std::to_string(dim()) + "x" + std::to_string(dim()) + " matrices");
}

int ZSetup::functional_of(int letter) const {
  const int f = generator_map.empty() ? letter : generator_map.at(static_cast<std::size_t>(letter));
  if (f < 0 || f >= k * k) throw std::out_of_range("generator map points outside the dual basis");
  return f;
}

Matrix z_of(const Functional& phi, const Matrix& beta, int k) {
  require(static_cast<int>(phi.values_on_basis.size()) == k * k, "z_of: functional does not match k");
  require(beta.rows() % k == 0 && beta.cols() % k == 0, "z_of: matrix size is not a multiple of k");
  std::vector<cd> v;
  for (const auto& s : phi.values_on_basis) v.push_back(s.to_complex());
  const auto rows = beta.rows() / k;
  const auto cols = beta.cols() / k;
  Matrix out = Matrix::Zero(rows, cols);
  for (int a = 0; a < rows; ++a)
    for (int b = 0; b < cols; ++b) {
      cd acc = 0;
      for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) acc += beta(a * k + r, b * k + s) * v[static_cast<std::size_t>(r * k + s)];
      out(a, b) = acc;
    }
  return out;
}

Matrix eval_serial(const NCPoly& p, const MatrixPoint& pt, EvalMode mode, const ZSetup& z) {
  const Images im = images_for(p, pt, mode, z);
  Matrix out = Matrix::Zero(im.dim(), im.dim());
  for (const auto& [key, c] : p.terms()) out += c.to_complex() * eval_word(key[0], im);
  return out;
}

Matrix eval(const NCPoly& p, const MatrixPoint& pt, EvalMode mode, const ZSetup& z) {
  const Images im = images_for(p, pt, mode, z);
  std::vector<const NCPoly::Terms::value_type*> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::vector<Matrix> parts(terms.size());
  const long n = static_cast<long>(terms.size());
#pragma omp parallel for schedule(static) if (n > 16)
  for (long i = 0; i < n; ++i)
    parts[static_cast<std::size_t>(i)] = terms[static_cast<std::size_t>(i)]->second.to_complex() *
                                         eval_word(terms[static_cast<std::size_t>(i)]->first[0], im);
  Matrix out = Matrix::Zero(im.dim(), im.dim());
  for (const auto& m : parts) out += m;
  return out;
}

Matrix delta_numeric(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y, const Direction& z,
                     EvalMode mode, const ZSetup& zs) {
  x.validate();
  y.validate();
  require(x.k == y.k, "delta: points over different algebras");
  require(x.mats.size() == y.mats.size() && x.mats.size() == z.size(), "delta: tuple sizes differ");
  MatrixPoint block{x.level + y.level, x.k, {}};
  for (std::size_t j = 0; j < z.size(); ++j) block.mats.push_back(block_upper(x.mats[j], z[j], y.mats[j]));
  const Matrix full = eval(p, block, mode, zs);
  const int kc = mode == EvalMode::BValued ? x.k : 1;
  return full.block(0, x.level * kc, x.level * kc, y.level * kc);
}

Matrix delta_symbolic(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y, const Direction& z,
                      EvalMode mode, const ZSetup& zs) {
  const Images ix = images_for(p, x, mode, zs);
  const Images iy = images_for(p, y, mode, zs);
  const auto dirs = direction_images(p, z, mode, zs);
  Matrix out = Matrix::Zero(ix.dim(), iy.dim());
  for (int j = 0; j < p.n_vars(); ++j) {
    const auto& d = dirs[static_cast<std::size_t>(j)];
    if (d.isZero(0.0)) continue;
    const TensorPoly u = free_diff(p, j);
    for (const auto& [key, c] : u.terms())
      out += c.to_complex() * eval_word(key[0], ix) * d * eval_word(key[1], iy);
  }
  return out;
}

double symbolic_vs_numeric_delta(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y, const Direction& z,
                                 EvalMode mode, const ZSetup& zs) {
  const Matrix num = delta_numeric(p, x, y, z, mode, zs);
  const Matrix sym = delta_symbolic(p, x, y, z, mode, zs);
  return relative(sym - num, num);
}

Matrix cyclic_numeric(const NCPoly& p, const MatrixPoint& pi, EvalMode mode, const ZSetup& zs, int var) {
  pi.validate();
  const int n = pi.level;
  Matrix out = Matrix::Zero(n, n);
  if (mode == EvalMode::ZValued) {
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Matrix gamma = Matrix::Zero(n * pi.k, n * pi.k);
        for (int r = 0; r < pi.k; ++r) gamma(b * pi.k + r, c * pi.k + r) = 1;
        out(c, b) = delta_numeric(p, pi, pi, {gamma}, mode, zs).trace();
      }
    return out;
  }
  require(pi.k == 1 && p.algebra().k == 1, "cyclic_numeric in BValued mode needs scalar coefficients");
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      Direction dir(pi.mats.size(), Matrix::Zero(n, n));
      dir.at(static_cast<std::size_t>(var))(b, c) = 1;
      out(c, b) = delta_numeric(p, pi, pi, dir, mode, zs).trace();
    }
  return out;
}

Matrix cyclic_symbolic(const NCPoly& p, const MatrixPoint& pi, EvalMode mode, const ZSetup& zs, int var) {
  if (mode == EvalMode::BValued) return eval(cyclic_derivative(p, var), pi, mode, zs);
  NCPoly q = p.zero_like();
  for (int j = 0; j < p.n_vars(); ++j)
    if (zs.functional_of(j) == 0) q += cyclic_derivative(p, j);
  return eval(q, pi, mode, zs);
}

Matrix delta2_numeric(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y, const MatrixPoint& w,
                      const Direction& z1, const Direction& z2, EvalMode mode, const ZSetup& zs) {
  x.validate();
  y.validate();
  w.validate();
  require(x.k == y.k && y.k == w.k, "delta2: points over different algebras");
  require(x.mats.size() == y.mats.size() && y.mats.size() == w.mats.size() && z1.size() == x.mats.size() &&
              z2.size() == x.mats.size(),
          "delta2: tuple sizes differ");
  MatrixPoint block{x.level + y.level + w.level, x.k, {}};
  for (std::size_t j = 0; j < x.mats.size(); ++j)
    block.mats.push_back(block_upper3(x.mats[j], z1[j], y.mats[j], z2[j], w.mats[j]));
  const Matrix full = eval(p, block, mode, zs);
  const int kc = mode == EvalMode::BValued ? x.k : 1;
  return full.block(0, (x.level + y.level) * kc, x.level * kc, w.level * kc);
}

SecondOrderResidual symbolic_vs_numeric_delta2(const NCPoly& p, const MatrixPoint& x, const MatrixPoint& y,
                                               const MatrixPoint& w, const Direction& z1, const Direction& z2,
                                               EvalMode mode, const ZSetup& zs) {
  const Matrix num = delta2_numeric(p, x, y, w, z1, z2, mode, zs);
  const Images ix = images_for(p, x, mode, zs);
  const Images iy = images_for(p, y, mode, zs);
  const Images iw = images_for(p, w, mode, zs);
  const auto d1 = direction_images(p, z1, mode, zs);
  const auto d2 = direction_images(p, z2, mode, zs);

  auto sandwich = [&](const TensorPoly3& t, const Matrix& a, const Matrix& b, Matrix& acc) {
    for (const auto& [key, c] : t.terms())
      acc += c.to_complex() * eval_word(key[0], ix) * a * eval_word(key[1], iy) * b * eval_word(key[2], iw);
  };
  Matrix left = Matrix::Zero(num.rows(), num.cols());
  Matrix right = Matrix::Zero(num.rows(), num.cols());
  for (int i = 0; i < p.n_vars(); ++i)
    for (int j = 0; j < p.n_vars(); ++j) {
      const auto& a = d1[static_cast<std::size_t>(i)];
      const auto& b = d2[static_cast<std::size_t>(j)];
      // first cut (direction z1) on letter i, second cut (z2) on letter j
      sandwich(diff_tensor_left(free_diff(p, j), i), a, b, left);
      sandwich(diff_tensor_right(free_diff(p, i), j), a, b, right);
    }
  return {relative(left - num, num), relative(right - num, num)};
}

MatrixPoint random_point(Rng& rng, int level, int k, int count) {
  MatrixPoint pt{level, k, {}};
  for (int j = 0; j < count; ++j) pt.mats.push_back(scaled_to_unit_ball(rng, ginibre(rng, level * k, level * k)));
  return pt;
}

Matrix random_block(Rng& rng, int rows, int cols) { return scaled_to_unit_ball(rng, ginibre(rng, rows, cols)); }

Matrix random_invertible(Rng& rng, int n) {
  const Matrix g = ginibre(rng, n, n);
  return Matrix::Identity(n, n) + 0.5 * g / op_norm(g);
}

double condition_number(const Matrix& s) {
  Eigen::JacobiSVD<Matrix> svd(s);
  const auto& sv = svd.singularValues();
  return sv(0) / sv(sv.size() - 1);
}

AxiomReport check_nc_axioms(const NCPoly& p, EvalMode mode, const ZSetup& zs, std::uint64_t seed, int trials,
                            int max_level, double tolerance) {
  AxiomReport report;
  report.tolerance = tolerance;
  const int k = mode == EvalMode::BValued ? p.algebra().k : zs.k;
  const int count = mode == EvalMode::BValued ? p.n_vars() : 1;
  const int kc = mode == EvalMode::BValued ? k : 1;
  std::uniform_int_distribution<int> lvl(1, max_level);
  for (int t = 0; t < trials; ++t) {
    Rng rng = stream_for(seed, static_cast<std::uint64_t>(t));
    const int n1 = lvl(rng);
    const int n2 = lvl(rng);
    const MatrixPoint x = random_point(rng, n1, k, count);
    const MatrixPoint y = random_point(rng, n2, k, count);

    MatrixPoint sum{n1 + n2, k, {}};
    for (int j = 0; j < count; ++j) sum.mats.push_back(block_diag(x.mats[static_cast<std::size_t>(j)],
                                                                  y.mats[static_cast<std::size_t>(j)]));
    const Matrix fx = eval(p, x, mode, zs);
    const Matrix fy = eval(p, y, mode, zs);
    const Matrix expected_sum = block_diag(fx, fy);
    report.max_direct_sum = std::max(report.max_direct_sum, relative(eval(p, sum, mode, zs) - expected_sum, expected_sum));

    const Matrix s = random_invertible(rng, n1);
    const Matrix sb = kron_identity(s, k);
    const Matrix sb_inv = sb.inverse();
    MatrixPoint conj{n1, k, {}};
    for (const auto& m : x.mats) conj.mats.push_back(sb * m * sb_inv);
    const Matrix so = kron_identity(s, kc);
    const Matrix expected_conj = so * fx * so.inverse();
    const double res = relative(eval(p, conj, mode, zs) - expected_conj, expected_conj) / condition_number(s);
    report.max_similarity = std::max(report.max_similarity, res);
    ++report.trials;
  }
  return report;
}

} // namespace ncfree
