// Copyright 2026 The slhkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slhkit/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "slhkit/classical_lin.hpp"
#include "slhkit/fock_sim.hpp"
#include "slhkit/heisenberg_weyl.hpp"
#include "slhkit/qsde_algebra.hpp"
#include "slhkit/random.hpp"

namespace slh::cli {

using io::Json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Network load_network(const Json& doc) {
  if (!doc.is_object()) throw ParseError("network file must be a JSON object");
  Network net;
  if (doc.contains("systems")) {
    const Json& systems = doc["systems"];
    if (!systems.is_object()) throw ParseError("'systems' must be an object");
    for (const auto& [name, model] : systems.items()) {
      try {
        net.systems.emplace(name, io::model_from_json(model));
      } catch (const Error& e) {
        throw ParseError("system '" + name + "': " + e.what());
      }
    }
  }
  if (doc.contains("expression")) {
    if (!doc["expression"].is_string()) throw ParseError("'expression' must be a string");
    net.expression = expr::parse_expression(doc["expression"].get<std::string>());
    for (const auto& name : expr::leaves(*net.expression))
      if (!net.systems.contains(name)) throw ParseError("unknown system '" + name + "' in expression");
  }
  net.experiment = doc.value("experiment", Json::object());
  net.thresholds = doc.value("thresholds", Json::object());
  net.response = doc.value("response", Json::object());
  return net;
}

namespace {

bool is_classical(const io::SystemModel& m) { return std::holds_alternative<classical::Model>(m); }

qsde::CoeffMatrix to_coeff(const io::SystemModel& m, double tol) {
  if (const auto* s = std::get_if<qsde::SLHTriple>(&m)) return qsde::slh_to_coeff(*s, tol);
  if (const auto* g = std::get_if<qsde::CoeffMatrix>(&m)) return *g;
  if (const auto* h = std::get_if<qsde::LieAlgElem>(&m)) return qsde::hat_exp(*h);
  throw DomainError("classical system used where a quantum system is required");
}

enum class Algebra { classical, quantum };

Algebra algebra_of(const Network& net, const expr::Expr& e) {
  bool any_classical = false, any_quantum = false;
  for (const auto& name : expr::leaves(e)) (is_classical(net.systems.at(name)) ? any_classical : any_quantum) = true;
  if (any_classical && any_quantum)
    throw DomainError("expression mixes classical and quantum systems");
  return any_classical ? Algebra::classical : Algebra::quantum;
}

qsde::CoeffMatrix eval_quantum(const Network& net, const expr::Expr& e, double tol) {
  return expr::evaluate<qsde::CoeffMatrix>(
      e, [&](const std::string& n) { return to_coeff(net.systems.at(n), tol); },
      [](const qsde::CoeffMatrix& a, const qsde::CoeffMatrix& b) { return qsde::series(a, b); },
      [](const qsde::CoeffMatrix& a, const qsde::CoeffMatrix& b) { return qsde::concat(a, b); });
}

classical::Model eval_classical(const Network& net, const expr::Expr& e, bool cascade) {
  return expr::evaluate<classical::Model>(
      e, [&](const std::string& n) { return std::get<classical::Model>(net.systems.at(n)); },
      [cascade](const classical::Model& down, const classical::Model& up) {
        return cascade ? classical::cascade(up, down) : classical::series(down, up);
      },
      [](const classical::Model& a, const classical::Model& b) { return classical::concat(a, b); });
}

const expr::Expr& require_expression(const Network& net) {
  if (!net.expression) throw ParseError("network file has no 'expression'");
  return *net.expression;
}

/// The system named by --system, or the only system of the wanted kind.
const io::SystemModel& pick_system(const Network& net, const std::string& name,
                                   const std::function<bool(const io::SystemModel&)>& wanted,
                                   const char* kind) {
  if (!name.empty()) {
    auto it = net.systems.find(name);
    if (it == net.systems.end()) throw ParseError("unknown system '" + name + "'");
    if (!wanted(it->second)) throw DomainError("system '" + name + "' is not a " + kind + " system");
    return it->second;
  }
  const io::SystemModel* found = nullptr;
  for (const auto& [n, m] : net.systems) {
    if (!wanted(m)) continue;
    if (found != nullptr) throw ParseError(std::string("several ") + kind + " systems; pass --system");
    found = &m;
  }
  if (found == nullptr) throw ParseError(std::string("no ") + kind + " system in the network file");
  return *found;
}

Json unitarity_json(const qsde::UnitarityCheck& u) {
  return Json{{"isometry_residual", u.isometry}, {"coisometry_residual", u.coisometry}, {"unitary", u.unitary}};
}

struct Output {
  std::string path;
  std::ostream& fallback;

  void write(const std::string& text) const {
    if (path.empty()) {
      fallback << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << text;
  }
};

std::string table_csv(const std::vector<fock::ConvergenceRow>& rows) {
  std::string s = "m,dt,abs_error,rel_error,empirical_order\n";
  for (const auto& r : rows)
    s += std::to_string(r.m) + "," + format_double(r.dt) + "," + format_double(r.abs_error) + "," +
         format_double(r.rel_error) + "," + format_double(r.order) + "\n";
  return s;
}

std::string table_json(const std::vector<fock::ConvergenceRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row{{"m", r.m}, {"dt", r.dt}, {"abs_error", r.abs_error}, {"rel_error", r.rel_error}};
    row["empirical_order"] = std::isnan(r.order) ? Json(nullptr) : Json(r.order);
    arr.push_back(row);
  }
  return io::dump(arr);
}

struct ExperimentSetup {
  double t = 1.0;
  std::vector<int> grid_sizes{16, 32, 64, 128, 256, 512, 1024};
  fock::MatrixElementSpec spec;
  fock::SliceRule rule = fock::SliceRule::increment;
};

ExperimentSetup read_experiment(const Json& e, SpaceDims dims) {
  ExperimentSetup x;
  x.t = e.value("t", 1.0);
  if (!(x.t > 0.0)) throw ParseError("experiment 't' must be positive");
  if (e.contains("grid_sizes")) x.grid_sizes = e["grid_sizes"].get<std::vector<int>>();
  if (x.grid_sizes.empty()) throw ParseError("experiment 'grid_sizes' is empty");
  for (std::size_t i = 1; i < x.grid_sizes.size(); ++i)
    if (x.grid_sizes[i] <= x.grid_sizes[i - 1]) throw ParseError("experiment 'grid_sizes' must increase");
  Vector e0 = Vector::Zero(dims.n_h);
  e0(0) = 1.0;
  x.spec.u = e.contains("u") ? io::vector_from_json(e["u"]) : e0;
  x.spec.v = e.contains("v") ? io::vector_from_json(e["v"]) : e0;
  x.spec.f = e.contains("f") ? io::step_function_from_json(e["f"]) : fock::StepFunction::zero(dims.n_k, 0.0, x.t);
  x.spec.g = e.contains("g") ? io::step_function_from_json(e["g"]) : fock::StepFunction::zero(dims.n_k, 0.0, x.t);
  const std::string rule = e.value("slice_rule", std::string("increment"));
  if (rule == "increment") {
    x.rule = fock::SliceRule::increment;
  } else if (rule == "exponential") {
    x.rule = fock::SliceRule::exponential;
  } else {
    throw ParseError("unknown slice_rule '" + rule + "'");
  }
  x.spec.validate(dims);
  return x;
}

/// Evaluates the thresholds block against a convergence table.
bool thresholds_met(const Json& th, const std::vector<fock::ConvergenceRow>& rows, std::ostream& err) {
  bool ok = true;
  if (th.contains("final_error")) {
    const double limit = th["final_error"].get<double>();
    if (!(rows.back().abs_error < limit)) {
      err << "threshold: final error " << format_double(rows.back().abs_error) << " >= "
          << format_double(limit) << "\n";
      ok = false;
    }
  }
  if (th.contains("min_order")) {
    const double order = fock::fit_order(rows);
    if (!(order >= th["min_order"].get<double>())) {
      err << "threshold: fitted order " << format_double(order) << " below minimum\n";
      ok = false;
    }
  }
  if (th.contains("monotone_from")) {
    if (!fock::monotone_nonincreasing(rows, th["monotone_from"].get<int>())) {
      err << "threshold: errors are not monotone\n";
      ok = false;
    }
  }
  return ok;
}

struct Common {
  std::string input;
  std::string output;
  double tol = 1e-10;
  std::string format = "json";
};

void add_common(CLI::App* sub, Common& c, bool needs_input, const std::string& default_format) {
  c.format = default_format;
  auto* opt = sub->add_option("--input,-i", c.input, "Network file (JSON)");
  if (needs_input) opt->required();
  sub->add_option("--output,-o", c.output, "Write results here instead of stdout");
  sub->add_option("--tol", c.tol, "Validation tolerance")->capture_default_str();
  sub->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

int cmd_compose(const Common& c, bool cascade, bool require_unitary, std::ostream& out, std::ostream& err) {
  if (c.format != "json") throw ParseError("compose only supports --format json");
  const Network net = load_network(io::read_json_file(c.input));
  const expr::Expr& e = require_expression(net);
  Json doc;
  doc["expression"] = expr::pretty_print(e);
  int code = kOk;
  if (algebra_of(net, e) == Algebra::classical) {
    doc["algebra"] = "classical";
    doc["result"] = io::model_to_json(eval_classical(net, e, cascade));
  } else {
    const qsde::CoeffMatrix g = eval_quantum(net, e, c.tol);
    const qsde::UnitarityCheck u = qsde::is_unitary_generator(g, c.tol);
    doc["algebra"] = "quantum";
    doc["result"] = io::model_to_json(g);
    doc["unitarity"] = unitarity_json(u);
    if (u.unitary) {
      doc["slh"] = io::model_to_json(qsde::coeff_to_slh(g, c.tol));
    } else if (require_unitary) {
      err << "compose: result is not a unitary generator\n";
      code = kFailure;
    }
  }
  Output{c.output, out}.write(io::dump(doc));
  return code;
}

int cmd_check(const Common& c, std::ostream& out, std::ostream& err) {
  if (c.format != "json") throw ParseError("check only supports --format json");
  const Network net = load_network(io::read_json_file(c.input));
  Json systems = Json::object();
  bool pass = true;
  for (const auto& [name, model] : net.systems) {
    Json entry{{"type", io::model_type(model)}};
    if (const auto* v = std::get_if<classical::Model>(&model)) {
      entry["inverse_residual"] = nullptr;
      if (v->square()) {
        try {
          const classical::Model inv = classical::series_inverse(*v);
          const classical::Model id = classical::Model::identity(v->nx(), v->nu());
          const double r = std::max((classical::series(*v, inv).model_matrix() - id.model_matrix()).norm(),
                                    (classical::series(inv, *v).model_matrix() - id.model_matrix()).norm());
          entry["inverse_residual"] = r;
          if (!(r < c.tol)) pass = false;
        } catch (const DomainError&) {
          entry["inverse_residual"] = nullptr;
        }
      }
    } else {
      const qsde::CoeffMatrix g = to_coeff(model, c.tol);
      const qsde::UnitarityCheck u = qsde::is_unitary_generator(g, c.tol);
      entry.update(unitarity_json(u));
      if (!u.unitary) pass = false;
      try {
        const qsde::CoeffMatrix inv = qsde::gl_inverse(g);
        const double r = std::max(qsde::series(g, inv).G().norm(), qsde::series(inv, g).G().norm());
        entry["inverse_residual"] = r;
        if (!(r < c.tol)) pass = false;
      } catch (const DomainError&) {
        entry["inverse_residual"] = nullptr;
        pass = false;
      }
    }
    systems[name] = entry;
  }

  Json nodes = Json::array();
  if (net.expression) {
    const Algebra alg = algebra_of(net, *net.expression);
    std::function<void(const expr::Expr&)> visit = [&](const expr::Expr& e) {
      if (e.op() == expr::Op::leaf) return;
      visit(e.lhs());
      visit(e.rhs());
      double r = 0.0;
      if (alg == Algebra::quantum) {
        const qsde::CoeffMatrix a = eval_quantum(net, e.lhs(), c.tol), b = eval_quantum(net, e.rhs(), c.tol);
        if (e.op() == expr::Op::series) {
          r = (qsde::belavkin_rep(a) * qsde::belavkin_rep(b) - qsde::belavkin_rep(qsde::series(a, b))).norm();
        } else {
          // Ampliated factors act on disjoint channels, so their product is the concatenation.
          const qsde::CoeffMatrix wa = qsde::ampliate_first(a, b.dims().n_k);
          const qsde::CoeffMatrix wb = qsde::ampliate_second(b, a.dims().n_k);
          r = (qsde::belavkin_rep(wb) * qsde::belavkin_rep(wa) - qsde::belavkin_rep(qsde::concat(a, b))).norm();
        }
      } else {
        const classical::Model a = eval_classical(net, e.lhs(), false), b = eval_classical(net, e.rhs(), false);
        if (e.op() == expr::Op::series && a.square() && b.square())
          r = (classical::rho(a) * classical::rho(b) - classical::rho(classical::series(a, b))).norm();
      }
      if (!(r < c.tol)) pass = false;
      nodes.push_back(Json{{"expression", expr::pretty_print(e)}, {"homomorphism_residual", r}});
    };
    visit(*net.expression);
  }

  Json doc{{"systems", systems}, {"nodes", nodes}, {"tol", c.tol}, {"pass", pass}};
  Output{c.output, out}.write(io::dump(doc));
  if (!pass) err << "check: at least one residual exceeds tolerance\n";
  return pass ? kOk : kFailure;
}

int cmd_exp(const Common& c, const std::string& system, std::ostream& out) {
  const Network net = load_network(io::read_json_file(c.input));
  const auto& m = pick_system(net, system, [](const io::SystemModel& s) { return std::holds_alternative<qsde::LieAlgElem>(s); }, "lie");
  Output{c.output, out}.write(io::dump(io::model_to_json(qsde::hat_exp(std::get<qsde::LieAlgElem>(m)))));
  return kOk;
}

int cmd_log(const Common& c, const std::string& system, std::ostream& out) {
  const Network net = load_network(io::read_json_file(c.input));
  const auto& m = pick_system(net, system, [](const io::SystemModel& s) {
    return std::holds_alternative<qsde::CoeffMatrix>(s) || std::holds_alternative<qsde::SLHTriple>(s);
  }, "coeff/slh");
  Output{c.output, out}.write(io::dump(io::model_to_json(qsde::hat_log(to_coeff(m, c.tol)))));
  return kOk;
}

int write_table(const Common& c, const Network& net, const std::vector<fock::ConvergenceRow>& rows,
                std::ostream& out, std::ostream& err) {
  Output{c.output, out}.write(c.format == "csv" ? table_csv(rows) : table_json(rows));
  err << "fitted order " << format_double(fock::fit_order(rows)) << "\n";
  return thresholds_met(net.thresholds, rows, err) ? kOk : kFailure;
}

int cmd_trotter(const Common& c, bool swap, std::ostream& out, std::ostream& err) {
  const Network net = load_network(io::read_json_file(c.input));
  const expr::Expr& e = require_expression(net);
  if (algebra_of(net, e) != Algebra::quantum) throw DomainError("trotter needs quantum systems");
  std::vector<qsde::CoeffMatrix> factors;
  for (const auto& operand : expr::series_operands(e)) factors.push_back(eval_quantum(net, operand, c.tol));
  if (swap) std::reverse(factors.begin(), factors.end());
  qsde::CoeffMatrix target = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) target = qsde::series(target, factors[i]);
  const ExperimentSetup x = read_experiment(net.experiment, target.dims());
  const auto rows = fock::trotter_experiment(factors, target, x.spec, x.t, x.grid_sizes, x.rule);
  return write_table(c, net, rows, out, err);
}

int cmd_holevo(const Common& c, const std::string& system, std::ostream& out, std::ostream& err) {
  const Network net = load_network(io::read_json_file(c.input));
  const auto& m = pick_system(net, system, [](const io::SystemModel& s) { return std::holds_alternative<qsde::LieAlgElem>(s); }, "lie");
  const auto& h = std::get<qsde::LieAlgElem>(m);
  const ExperimentSetup x = read_experiment(net.experiment, h.dims());
  return write_table(c, net, fock::holevo_experiment(h, x.spec, x.t, x.grid_sizes), out, err);
}

int cmd_response(const Common& c, const std::string& system, double max_step, std::ostream& out) {
  const Network net = load_network(io::read_json_file(c.input));
  const auto& v = std::get<classical::Model>(pick_system(net, system, is_classical, "classical"));
  const Json& r = net.response;
  if (!r.contains("t_grid")) throw ParseError("response block needs 't_grid'");
  const auto grid = r["t_grid"].get<std::vector<double>>();
  const Vector x0 = r.contains("x0") ? io::vector_from_json(r["x0"]) : Vector::Zero(v.nx());
  Matrix inputs = Matrix::Zero(v.nu(), static_cast<Index>(grid.size()));
  if (r.contains("inputs")) inputs = io::matrix_from_json(r["inputs"]).transpose();
  const auto rk4 = classical::time_response(v, x0, inputs, grid, max_step);
  const auto exact = classical::exact_response(v, x0, inputs, grid);

  std::string s = "t";
  for (Index i = 0; i < v.ny(); ++i) {
    const std::string p = "y" + std::to_string(i);
    s += "," + p + "_re," + p + "_im," + p + "_exact_re," + p + "_exact_im";
  }
  s += "\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    s += format_double(grid[k]);
    for (Index i = 0; i < v.ny(); ++i) {
      const Scalar a = rk4.y(i, static_cast<Index>(k)), b = exact.y(i, static_cast<Index>(k));
      s += "," + format_double(a.real()) + "," + format_double(a.imag()) + "," + format_double(b.real()) +
           "," + format_double(b.imag());
    }
    s += "\n";
  }
  Output{c.output, out}.write(s);
  return kOk;
}

struct WeylOptions {
  std::vector<int> cutoffs{4, 8, 12};
  std::vector<double> norm_caps{0.25, 0.5};
  int modes = 1;
  int pairs = 4;
  int samples = 8;
  std::uint64_t seed = 2026;
};

int cmd_weyl(const Common& c, const WeylOptions& w, std::ostream& out) {
  struct Row {
    int cutoff;
    double cap, analytic, truncated;
  };
  std::vector<Row> rows;
  for (std::size_t ci = 0; ci < w.norm_caps.size(); ++ci) {
    const double cap = w.norm_caps[ci];
    for (int cutoff : w.cutoffs) {
      random::Engine rng(w.seed + 7919 * ci);
      const weyl::TruncatedFock space(w.modes, cutoff);
      Row row{cutoff, cap, 0.0, 0.0};
      for (int p = 0; p < w.pairs; ++p) {
        const weyl::HeisenbergElem g2{random::unitary(rng, w.modes), random::capped_vector(rng, w.modes, cap), 0.3};
        const weyl::HeisenbergElem g1{random::unitary(rng, w.modes), random::capped_vector(rng, w.modes, cap), -0.7};
        std::vector<weyl::TestPair> tests;
        for (int s = 0; s < w.samples; ++s)
          tests.push_back({random::capped_vector(rng, w.modes, cap), random::capped_vector(rng, w.modes, cap)});
        const weyl::CcrResiduals res = weyl::weyl_ccr_check(g2, g1, tests, &space);
        row.analytic = std::max({row.analytic, res.analytic, res.modified});
        row.truncated = std::max(row.truncated, res.truncated);
      }
      rows.push_back(row);
    }
  }
  std::string s;
  if (c.format == "csv") {
    s = "cutoff,norm_cap,analytic_residual,truncated_residual\n";
    for (const auto& r : rows)
      s += std::to_string(r.cutoff) + "," + format_double(r.cap) + "," + format_double(r.analytic) + "," +
           format_double(r.truncated) + "\n";
  } else {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back(Json{{"cutoff", r.cutoff}, {"norm_cap", r.cap}, {"analytic_residual", r.analytic},
                         {"truncated_residual", r.truncated}});
    s = io::dump(arr);
  }
  Output{c.output, out}.write(s);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composition algebra and Lie-Trotter experiments for input/output system models", "slhkit"};
  app.require_subcommand(1);

  Common compose_c, check_c, exp_c, log_c, trotter_c, holevo_c, resp_c, weyl_c;
  bool cascade = false, require_unitary = false, swap = false;
  std::string exp_sys, log_sys, holevo_sys, resp_sys;
  double max_step = 1e-3;
  WeylOptions weyl_opts;

  auto* compose = app.add_subcommand("compose", "Evaluate the network expression");
  add_common(compose, compose_c, true, "json");
  compose->add_flag("--cascade", cascade, "Classical series nodes connect distinct states");
  compose->add_flag("--require-unitary", require_unitary, "Fail unless the quantum result is unitary");

  auto* check = app.add_subcommand("check", "Report unitarity, inverse and homomorphism residuals");
  add_common(check, check_c, true, "json");

  auto* exp = app.add_subcommand("exp", "hat-exp of a lie system");
  add_common(exp, exp_c, true, "json");
  exp->add_option("--system", exp_sys, "System name");

  auto* log = app.add_subcommand("log", "hat-log of a coeff or slh system");
  add_common(log, log_c, true, "json");
  log->add_option("--system", log_sys, "System name");

  auto* trotter = app.add_subcommand("trotter", "Interval-wise product convergence table");
  add_common(trotter, trotter_c, true, "csv");
  trotter->add_flag("--swap", swap, "Reverse the factor order (and the target series product)");

  auto* holevo = app.add_subcommand("holevo", "Holevo time-ordered exponential convergence table");
  add_common(holevo, holevo_c, true, "csv");
  holevo->add_option("--system", holevo_sys, "System name");

  auto* resp = app.add_subcommand("classical-response", "RK4 and closed-form time response");
  add_common(resp, resp_c, true, "csv");
  resp->add_option("--system", resp_sys, "System name");
  resp->add_option("--max-step", max_step, "Largest RK4 step")->capture_default_str();

  auto* weyl = app.add_subcommand("weyl-check", "Weyl CCR residual table");
  add_common(weyl, weyl_c, false, "csv");
  weyl->add_option("--cutoffs", weyl_opts.cutoffs, "Fock cutoffs")->delimiter(',');
  weyl->add_option("--norm-caps", weyl_opts.norm_caps, "Norm caps for phi, f, g")->delimiter(',');
  weyl->add_option("--modes", weyl_opts.modes, "Number of modes")->check(CLI::Range(1, 4));
  weyl->add_option("--pairs", weyl_opts.pairs, "Random element pairs per row");
  weyl->add_option("--samples", weyl_opts.samples, "Test pairs (f, g) per element pair");
  weyl->add_option("--seed", weyl_opts.seed, "RNG seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*compose) return cmd_compose(compose_c, cascade, require_unitary, out, err);
    if (*check) return cmd_check(check_c, out, err);
    if (*exp) return cmd_exp(exp_c, exp_sys, out);
    if (*log) return cmd_log(log_c, log_sys, out);
    if (*trotter) return cmd_trotter(trotter_c, swap, out, err);
    if (*holevo) return cmd_holevo(holevo_c, holevo_sys, out, err);
    if (*resp) return cmd_response(resp_c, resp_sys, max_step, out);
    if (*weyl) return cmd_weyl(weyl_c, weyl_opts, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kParseError;
}

}  // namespace slh::cli
