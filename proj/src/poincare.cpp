#include "ncfree/poincare.hpp"

namespace ncfree {

namespace {

void require_single_letter(const NCPoly& p, const char* op) {
  if (p.n_vars() != 1) throw std::invalid_argument(std::string(op) + " needs a single-letter polynomial");
}

void require_scalar_tuple(std::span<const NCPoly> qs, const char* op) {
  if (qs.empty()) throw std::invalid_argument(std::string(op) + ": empty tuple");
  if (qs.front().algebra().k != 1)
    throw std::invalid_argument(std::string(op) + ": tuple form needs scalar coefficients");
  if (static_cast<int>(qs.size()) != qs.front().n_vars())
    throw std::invalid_argument(std::string(op) + ": tuple length must equal n_vars");
  for (const auto& q : qs) qs.front().require_compatible(q);
}

// sum_{d >= 1} h_d / d over components by the chosen grading.
NCPoly divide_by_degree(const std::map<int, NCPoly>& components, const NCPoly& zero) {
  NCPoly out = zero;
  for (const auto& [d, comp] : components)
    if (d >= 1) out += Scalar::rational(1, d) * comp;
  return out;
}

} // namespace

bool is_cyclically_exact(const NCPoly& q) {
  require_single_letter(q, "is_cyclically_exact");
  return theta_op(q).is_zero();
}

bool is_cyclically_exact(std::span<const NCPoly> qs) {
  if (qs.size() == 1 && qs.front().n_vars() == 1) return is_cyclically_exact(qs.front());
  require_scalar_tuple(qs, "is_cyclically_exact");
  return theta_voiculescu(qs).is_zero();
}

NCPoly antiderivative_cyclic(const NCPoly& q) {
  require_single_letter(q, "antiderivative_cyclic");
  const NCPoly h = PolyRing(q.algebra(), 1).x(0) * q;
  NCPoly p = divide_by_degree(homogeneous_components(h), q.zero_like());
  if (!(cyclic_derivative(p, 0) == q)) throw NotExact("no cyclic antiderivative: " + to_string(q));
  return p;
}

NCPoly antiderivative_cyclic(std::span<const NCPoly> qs) {
  if (qs.size() == 1 && qs.front().n_vars() == 1) return antiderivative_cyclic(qs.front());
  require_scalar_tuple(qs, "antiderivative_cyclic");
  PolyRing ring(qs.front().algebra(), qs.front().n_vars());
  NCPoly h = ring.zero();
  for (int j = 0; j < ring.n_vars(); ++j) h += ring.x(j) * qs[static_cast<std::size_t>(j)];
  NCPoly p = divide_by_degree(homogeneous_components(h), ring.zero());
  for (int j = 0; j < ring.n_vars(); ++j)
    if (!(cyclic_derivative(p, j) == qs[static_cast<std::size_t>(j)]))
      throw NotExact("no common cyclic antiderivative for the tuple");
  return p;
}

bool is_gradient_exact(const TensorPoly& xi, int var) {
  return diff_tensor_left(xi, var) == diff_tensor_right(xi, var);
}

NCPoly antiderivative_grad(const TensorPoly& xi, int var) {
  const NCPoly h = divergence(xi, var);
  NCPoly g = divide_by_degree(components_by_letter(h, var), h.zero_like());
  if (!(free_diff(g, var) == xi)) throw NotExact("no antiderivative for tensor: " + to_string(xi));
  return g;
}

bool kernel_membership(const NCPoly& p) {
  bool in_kernel = true;
  for (int i = 0; i < p.n_vars() && in_kernel; ++i) in_kernel = cyclic_derivative(p, i).is_zero();
  if (p.n_vars() == 1) {
    const bool sym_kernel = symmetrization(p, 0).is_zero();
    if (sym_kernel != in_kernel)
      throw std::logic_error("kernel of delta and of the symmetrization disagree on " + to_string(p));
  }
  return in_kernel;
}

NCPoly KernelDecomposition::recombine() const {
  NCPoly out = constant;
  for (const auto& [u, v] : commutators) out += commutator(u, v);
  return out;
}

KernelDecomposition kernel_decompose(const NCPoly& p) {
  require_single_letter(p, "kernel_decompose");
  if (!kernel_membership(p)) throw NotInKernel("delta[p] != 0 for " + to_string(p));

  PolyRing ring(p.algebra(), 1);
  const NCPoly x = ring.x(0);
  // slots s[a..b] as the word s_a X s_{a+1} ... X s_b (empty range = 1).
  auto segment = [&](const std::vector<std::uint16_t>& s, std::size_t a, std::size_t b) {
    if (a > b) return ring.one();
    std::vector<std::uint16_t> c(s.begin() + static_cast<long>(a), s.begin() + static_cast<long>(b) + 1);
    return ring.word(std::move(c), std::vector<std::uint8_t>(b - a, 0));
  };

  KernelDecomposition out{p.zero_like(), {}};
  for (const auto& [m, comp] : homogeneous_components(p)) {
    if (m == 0) {
      out.constant = comp;
      continue;
    }
    const std::size_t mm = static_cast<std::size_t>(m);
    for (const auto& [key, c] : comp.terms()) {
      const auto& s = key[0].coeffs;
      const Scalar w = c * Scalar::rational(1, m);
      auto push = [&](NCPoly u, NCPoly v) {
        if (!u.is_zero() && !v.is_zero()) out.commutators.emplace_back(w * u, std::move(v));
      };
      // [b0 X, b1 X ... X bm]
      push(segment(s, 0, 0) * x, segment(s, 1, mm));
      // [bj X, b_{j+1} X ... X bm b0 X ... b_{j-1} X], 1 <= j <= m-1
      for (std::size_t j = 1; j < mm; ++j)
        push(segment(s, j, j) * x, segment(s, j + 1, mm) * segment(s, 0, j - 1) * x);
      // [b0 X ... bj X, b_{j+1} X ... X bm], 0 <= j <= m-2
      for (std::size_t j = 0; j + 2 <= mm; ++j) push(segment(s, 0, j) * x, segment(s, j + 1, mm));
    }
  }
  if (!(out.recombine() == p))
    throw std::logic_error("kernel decomposition failed to recombine for " + to_string(p));
  return out;
}

AuditReport exact_sequence_audit(std::span<const NCPoly> samples) {
  AuditReport report;
  for (const auto& s : samples) {
    require_single_letter(s, "exact_sequence_audit");
    ++report.samples;
    const std::string tag = to_string(s);

    const NCPoly ds = cyclic_derivative(s, 0);
    if (!theta_op(ds).is_zero()) report.violations.push_back("theta(delta p) != 0 for p = " + tag);
    try {
      const NCPoly back = antiderivative_cyclic(ds);
      if (!(cyclic_derivative(back, 0) == ds))
        report.violations.push_back("antiderivative of delta p is wrong for p = " + tag);
    } catch (const NotExact&) {
      report.violations.push_back("delta p rejected as non-exact for p = " + tag);
    }

    const bool by_theta = theta_op(s).is_zero();
    const bool by_xi = xi_theta(s).is_zero();
    if (by_theta != by_xi) report.violations.push_back("theta and xi o theta disagree on q = " + tag);
    report.exact_inputs += by_theta;

    bool integrated = true;
    try {
      (void)antiderivative_cyclic(s);
    } catch (const NotExact&) {
      integrated = false;
    }
    if (integrated != by_theta)
      report.violations.push_back(std::string(by_theta ? "exact q failed to integrate: "
                                                       : "non-exact q integrated: ") + tag);
  }
  return report;
}

} // namespace ncfree
