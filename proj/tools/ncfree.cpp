// ncfree: command-line front end for the symbolic engine and its numeric checks.

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "ncfree/calculus.hpp"
#include "ncfree/haar.hpp"
#include "ncfree/io.hpp"
#include "ncfree/poincare.hpp"

using namespace ncfree;
using io::json;

namespace {

struct Common {
  std::string input;
  std::string output = "-";
  std::string format = "json";
  int var = 1;
};

void add_io(CLI::App* sub, Common& c, bool needs_input = true) {
  auto* opt = sub->add_option("-i,--input", c.input, "input JSON document");
  if (needs_input) opt->required();
  sub->add_option("-o,--out", c.output, "output file, - for stdout");
  sub->add_option("--output", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
}

int letter(const Common& c, int n_vars) {
  if (c.var < 1 || c.var > n_vars)
    throw std::invalid_argument("--var " + std::to_string(c.var) + " outside 1.." + std::to_string(n_vars));
  return c.var - 1;
}

std::vector<int> one_based(const FunctionalWord& w) {
  std::vector<int> out;
  for (int f : w) out.push_back(f + 1);
  return out;
}

std::string word_label(const FunctionalWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i] + 1);
  return s + ")";
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json estimate_json(const HaarEstimate& e) {
  return {{"mean", complex_json(e.mean)}, {"stderr", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
}

void emit(const Common& c, const json& j, const std::string& table) {
  if (c.format == "table") {
    if (c.output == "-") {
      std::cout << table;
    } else {
      std::ofstream out(c.output);
      out << table;
    }
    return;
  }
  io::write_file(c.output, j);
}

void emit_poly(const Common& c, const NCPoly& p, const std::vector<int>& gmap = {}) {
  emit(c, io::poly_to_json(p, gmap), to_string(p) + "\n");
}

template <class T>
void emit_tensor(const Common& c, const T& t) {
  emit(c, io::tensor_to_json(t), to_string(t) + "\n");
}

void emit_flag(const Common& c, const char* key, bool value) {
  emit(c, json{{key, value}}, std::string(key) + ": " + (value ? "true" : "false") + "\n");
}

// A tuple document {"schema_version": 1, "tuple": [poly, ...]} or a single poly.
std::vector<NCPoly> read_polys(const std::string& path) {
  const json j = io::read_file(path);
  std::vector<NCPoly> out;
  if (j.contains("tuple")) {
    for (const auto& d : j.at("tuple")) out.push_back(io::poly_from_json(d).poly);
  } else {
    out.push_back(io::poly_from_json(j).poly);
  }
  return out;
}

EvalMode parse_mode(const std::string& m) { return m == "z" ? EvalMode::ZValued : EvalMode::BValued; }

ZSetup zsetup(const io::PolyDocument& doc, int k) { return ZSetup{k, doc.generator_map}; }

json matrix_doc(const Matrix& m, int level, int k) { return io::matrices_to_json({m}, level, k); }

std::string matrix_table(const Matrix& m) {
  std::ostringstream os;
  os << std::setprecision(12) << m << '\n';
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("NCFREE_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Free differential calculus on non-commutative polynomials"};
  app.require_subcommand(1);
  Common c;
  std::function<void()> action;

  // Poly -> poly and poly -> tensor maps.
  auto unary = [&](const std::string& name, const std::string& help, bool uses_var,
                   std::function<void(const io::PolyDocument&)> body) {
    auto* sub = app.add_subcommand(name, help);
    add_io(sub, c);
    if (uses_var) sub->add_option("--var", c.var, "1-based letter index");
    sub->callback([&, body] { action = [&, body] { body(io::poly_from_json(io::read_file(c.input))); }; });
  };

  unary("diff", "free difference quotient", true,
        [&](const io::PolyDocument& d) { emit_tensor(c, free_diff(d.poly, letter(c, d.poly.n_vars()))); });
  unary("cyclic", "cyclic derivative", true, [&](const io::PolyDocument& d) {
    emit_poly(c, cyclic_derivative(d.poly, letter(c, d.poly.n_vars())), d.generator_map);
  });
  unary("cyclic-div", "cyclic divergence p X", true, [&](const io::PolyDocument& d) {
    emit_poly(c, cyclic_divergence(d.poly, letter(c, d.poly.n_vars())), d.generator_map);
  });
  unary("number", "number operator", true, [&](const io::PolyDocument& d) {
    emit_poly(c, number_op(d.poly, letter(c, d.poly.n_vars())), d.generator_map);
  });
  unary("grading", "grading operator N + id", true, [&](const io::PolyDocument& d) {
    emit_poly(c, grading_op(d.poly, letter(c, d.poly.n_vars())), d.generator_map);
  });
  unary("symmetrize", "cyclic derivative times X", true, [&](const io::PolyDocument& d) {
    emit_poly(c, symmetrization(d.poly, letter(c, d.poly.n_vars())), d.generator_map);
  });
  unary("theta-op", "id - rho", false, [&](const io::PolyDocument& d) { emit_poly(c, theta_op(d.poly)); });
  unary("rho", "rotation of the coefficient tuple", false,
        [&](const io::PolyDocument& d) { emit_poly(c, rho(d.poly)); });
  unary("xi-op", "xi", false, [&](const io::PolyDocument& d) { emit_poly(c, xi_op(d.poly)); });
  unary("kernel-check", "membership in the kernel of the cyclic derivative", false,
        [&](const io::PolyDocument& d) { emit_flag(c, "in_kernel", kernel_membership(d.poly)); });
  unary("kernel-decompose", "constant plus commutators", false, [&](const io::PolyDocument& d) {
    const auto k = kernel_decompose(d.poly);
    json comms = json::array();
    std::string table = "constant: " + to_string(k.constant) + "\n";
    for (const auto& [u, v] : k.commutators) {
      comms.push_back({{"left", io::poly_to_json(u)}, {"right", io::poly_to_json(v)}});
      table += "[" + to_string(u) + ", " + to_string(v) + "]\n";
    }
    emit(c, {{"constant", io::poly_to_json(k.constant)}, {"commutators", comms}}, table);
  });

  // Tensor inputs.
  auto tensor_cmd = [&](const std::string& name, const std::string& help,
                        std::function<void(const TensorPoly&)> body) {
    auto* sub = app.add_subcommand(name, help);
    add_io(sub, c);
    sub->add_option("--var", c.var, "1-based letter index");
    sub->callback([&, body] { action = [&, body] { body(io::tensor_from_json(io::read_file(c.input))); }; });
  };
  tensor_cmd("divergence", "u # X",
             [&](const TensorPoly& u) { emit_poly(c, divergence(u, letter(c, u.n_vars()))); });
  tensor_cmd("check-grad-exact", "is the tensor a free difference quotient", [&](const TensorPoly& u) {
    emit_flag(c, "exact", is_gradient_exact(u, letter(c, u.n_vars())));
  });
  tensor_cmd("antiderivative-grad", "g with free_diff(g) = u", [&](const TensorPoly& u) {
    emit_poly(c, antiderivative_grad(u, letter(c, u.n_vars())));
  });

  // Single polynomial or tuple.
  auto tuple_cmd = [&](const std::string& name, const std::string& help,
                       std::function<void(const std::vector<NCPoly>&)> body) {
    auto* sub = app.add_subcommand(name, help);
    add_io(sub, c);
    sub->callback([&, body] { action = [&, body] { body(read_polys(c.input)); }; });
  };
  tuple_cmd("check-cyclic-exact", "is the input a cyclic gradient",
            [&](const std::vector<NCPoly>& qs) { emit_flag(c, "exact", is_cyclically_exact(qs)); });
  tuple_cmd("antiderivative-cyclic", "p with cyclic derivative equal to the input",
            [&](const std::vector<NCPoly>& qs) { emit_poly(c, antiderivative_cyclic(qs)); });

  // Numeric harness.
  std::string mode = "b", point, xs, ys, zs_path;
  int trials = 100, max_level = 4, zk = 2;
  std::uint64_t seed = 0;
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "b (B-valued) or z (z(phi)-valued)")->check(CLI::IsMember({"b", "z"}));
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate at a matrix point");
  add_io(eval_cmd, c);
  add_mode(eval_cmd);
  eval_cmd->add_option("--point", point, "MatrixDocument")->required();
  eval_cmd->callback([&] {
    action = [&] {
      const auto doc = io::poly_from_json(io::read_file(c.input));
      const auto pt = io::point_from_json(io::read_file(point));
      const auto m = eval(doc.poly, pt, parse_mode(mode), zsetup(doc, pt.k));
      emit(c, matrix_doc(m, pt.level, mode == "z" ? 1 : pt.k), matrix_table(m));
    };
  });

  auto* delta_cmd = app.add_subcommand("delta", "top-right block of p at [[X, Z], [0, Y]]");
  add_io(delta_cmd, c);
  add_mode(delta_cmd);
  delta_cmd->add_option("--x", xs, "MatrixDocument")->required();
  delta_cmd->add_option("--y", ys, "MatrixDocument")->required();
  delta_cmd->add_option("--z", zs_path, "MatrixDocument with the direction blocks")->required();
  delta_cmd->callback([&] {
    action = [&] {
      const auto doc = io::poly_from_json(io::read_file(c.input));
      const auto x = io::point_from_json(io::read_file(xs));
      const auto y = io::point_from_json(io::read_file(ys));
      const auto z = io::matrices_from_json(io::read_file(zs_path));
      const auto zsu = zsetup(doc, x.k);
      const auto m = delta_numeric(doc.poly, x, y, z, parse_mode(mode), zsu);
      const double res = symbolic_vs_numeric_delta(doc.poly, x, y, z, parse_mode(mode), zsu);
      json j = matrix_doc(m, x.level, mode == "z" ? 1 : x.k);
      j["symbolic_residual"] = res;
      emit(c, j, matrix_table(m) + "symbolic residual: " + std::to_string(res) + "\n");
    };
  });

  auto* cyc_cmd = app.add_subcommand("cyclic-numeric", "cyclic gradient from traces of the block quotient");
  add_io(cyc_cmd, c);
  add_mode(cyc_cmd);
  cyc_cmd->add_option("--point", point, "MatrixDocument")->required();
  cyc_cmd->add_option("--var", c.var, "1-based letter index");
  cyc_cmd->callback([&] {
    action = [&] {
      const auto doc = io::poly_from_json(io::read_file(c.input));
      const auto pt = io::point_from_json(io::read_file(point));
      const auto zsu = zsetup(doc, pt.k);
      const int v = letter(c, doc.poly.n_vars());
      const Matrix num = cyclic_numeric(doc.poly, pt, parse_mode(mode), zsu, v);
      const Matrix sym = cyclic_symbolic(doc.poly, pt, parse_mode(mode), zsu, v);
      const double res = (num - sym).norm() / std::max(1.0, num.norm());
      json j = matrix_doc(num, pt.level, 1);
      j["symbolic_residual"] = res;
      emit(c, j, matrix_table(num) + "symbolic residual: " + std::to_string(res) + "\n");
    };
  });

  auto* ax_cmd = app.add_subcommand("axioms", "direct-sum and similarity checks");
  add_io(ax_cmd, c);
  add_mode(ax_cmd);
  ax_cmd->add_option("--trials", trials, "number of samples")->check(CLI::PositiveNumber);
  ax_cmd->add_option("--seed", seed, "RNG seed")->required();
  ax_cmd->add_option("--max-level", max_level, "largest matrix level")->check(CLI::PositiveNumber);
  ax_cmd->add_option("--k", zk, "k of the point in z mode")->check(CLI::PositiveNumber);
  ax_cmd->callback([&] {
    action = [&] {
      const auto doc = io::poly_from_json(io::read_file(c.input));
      const auto r = check_nc_axioms(doc.poly, parse_mode(mode), zsetup(doc, zk), seed, trials, max_level);
      std::ostringstream t;
      t << "trials " << r.trials << "\ndirect sum " << r.max_direct_sum << "\nsimilarity " << r.max_similarity
        << "\n" << (r.ok() ? "ok" : "FAILED") << "\n";
      emit(c,
           {{"trials", r.trials}, {"seed", seed}, {"max_direct_sum", r.max_direct_sum},
            {"max_similarity", r.max_similarity}, {"tolerance", r.tolerance}, {"ok", r.ok()}},
           t.str());
    };
  });

  // Haar oracle.
  auto* haar = app.add_subcommand("haar", "Monte-Carlo trace moments over Haar unitaries");
  haar->require_subcommand(1);
  HaarConfig cfg;
  int max_len = 2;
  auto add_haar = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "matrix size of B")->check(CLI::PositiveNumber);
    sub->add_option("--N", cfg.N, "level")->check(CLI::PositiveNumber);
    sub->add_option("--samples", cfg.samples, "Monte-Carlo samples")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "RNG seed")->required();
  };

  auto* verify = haar->add_subcommand("verify", "orthogonality table of word pairs");
  add_io(verify, c, false);
  add_haar(verify);
  verify->add_option("--max-len", max_len, "longest word")->check(CLI::NonNegativeNumber);
  verify->callback([&] {
    action = [&] {
      const auto r = verify_orthogonality(max_len, cfg);
      json entries = json::array();
      std::ostringstream t;
      t << std::left << std::setw(14) << "word_i" << std::setw(14) << "word_j" << std::setw(26) << "mean"
        << std::setw(12) << "stderr" << std::setw(10) << "target" << "ok\n";
      for (const auto& e : r.entries) {
        entries.push_back({{"word_i", one_based(e.wi)}, {"word_j", one_based(e.wj)},
                           {"estimate", estimate_json(e.estimate)}, {"target", e.target},
                           {"exact_zero", e.exact_zero}, {"ok", e.ok}});
        std::ostringstream m;
        m << std::setprecision(5) << e.estimate.mean.real() << (e.estimate.mean.imag() < 0 ? "" : "+")
          << e.estimate.mean.imag() << "i";
        t << std::setw(14) << word_label(e.wi) << std::setw(14) << word_label(e.wj) << std::setw(26) << m.str()
          << std::setw(12) << std::setprecision(4) << e.estimate.std_error << std::setw(10) << e.target
          << (e.ok ? "yes" : "NO") << "\n";
      }
      t << (r.ok() ? "all pairs within band" : "some pairs outside band") << "\n";
      emit(c,
           {{"k", cfg.k}, {"N", cfg.N}, {"samples", cfg.samples}, {"seed", cfg.seed}, {"max_len", max_len},
            {"limit_band", r.limit_band}, {"zero_sigmas", r.zero_sigmas}, {"entries", entries}, {"ok", r.ok()}},
           t.str());
    };
  });

  auto* recover = haar->add_subcommand("recover", "recover coefficients of a z(phi)-valued polynomial");
  add_io(recover, c);
  add_haar(recover);
  recover->add_option("--max-deg", max_len, "largest word length")->check(CLI::NonNegativeNumber);
  recover->callback([&] {
    action = [&] {
      const auto doc = io::poly_from_json(io::read_file(c.input));
      const auto recs = recover_coefficients(doc.poly, max_len, cfg, zsetup(doc, cfg.k));
      json arr = json::array();
      std::ostringstream t;
      t << std::setprecision(5);
      for (const auto& r : recs) {
        arr.push_back({{"word", one_based(r.word)}, {"pairing", estimate_json(r.pairing)},
                       {"recovered", complex_json(r.recovered)},
                       {"exact", {{"re", r.exact.real_string()}, {"im", r.exact.imag_string()}}}});
        t << word_label(r.word) << "  recovered " << r.recovered.real() << "  exact " << to_string(r.exact)
          << "\n";
      }
      emit(c, {{"k", cfg.k}, {"N", cfg.N}, {"samples", cfg.samples}, {"seed", cfg.seed}, {"coefficients", arr}},
           t.str());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (action) action();
  } catch (const NotExact& e) {
    std::cerr << "ncfree: not exact: " << e.what() << '\n';
    return 2;
  } catch (const NotInKernel& e) {
    std::cerr << "ncfree: not in kernel: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ncfree: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
