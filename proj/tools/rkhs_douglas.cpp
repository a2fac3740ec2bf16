// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end for the rkhs library.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <CLI11.hpp>

#include "rkhs/io.hpp"

namespace {

using namespace rkhs;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitFailedExpectation = 2;
constexpr int kExitParse = 64;
constexpr int kExitDomain = 65;

struct Settings {
  std::string kernel;
  std::string points;
  std::string base;
  std::string format;
  std::string output;
  std::string config;
  std::string lemma = "4.1";
  std::string phi;
  std::string psi;
  std::string a;
  std::string b;
  double tol = kDefaultPsdTolerance;
  std::uint64_t seed = 0;
  bool expect_pass = false;
  int n = 1;
  int degree = 0;
  int order = 12;
  int n_max = 6;
  int degree_bound = 0;
  int grid = 256;
  int iterations = 150;
  int trials = 200;
  int max_points = 8;
};

struct Report {
  json body;
  std::string text;
  std::string csv;
  bool passed = true;
};

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

Pointd origin_or(const std::string& text, int dimension) {
  if (text.empty() || text == "0") return Pointd::Zero(dimension);
  auto p = io::parse_point(text);
  if (p.size() != dimension)
    throw ParseError("--base has dimension " + std::to_string(p.size()) + ", kernel needs " + std::to_string(dimension));
  return p;
}

KernelSpec require_kernel(const Settings& s) {
  if (s.kernel.empty()) throw ParseError("--kernel is required");
  return io::kernel_from_argument(s.kernel);
}

PointSetd require_points(const Settings& s) {
  if (s.points.empty()) throw ParseError("--points is required");
  return io::read_points_csv_file(s.points);
}

json json_argument(const std::string& arg, const std::string& flag) {
  if (arg.empty()) throw ParseError(flag + " is required");
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::exception& e) {
      throw ParseError(flag + ": " + e.what());
    }
  }
  return io::read_json_file(arg);
}

std::string verdict_text(const PsdVerdict& v) {
  return std::string(v.is_psd ? "PSD" : "not PSD") + " (min eigenvalue " + fmt_double(v.min_eigenvalue) +
         ", tolerance " + fmt_double(v.tolerance) + ")\n";
}

std::string matrix_csv(const Eigen::MatrixXcd& m) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ",";
      os << m(i, j).real() << "," << m(i, j).imag();
    }
    os << "\n";
  }
  return os.str();
}

Report run_np_test(const Settings& s) {
  const auto spec = require_kernel(s);
  const auto base = origin_or(s.base, spec.dimension());
  Report r;
  std::optional<NpReport> np;
  if (!s.points.empty()) {
    np = np_test(spec, require_points(s), base, s.tol);
    np->seed = s.seed;
  } else {
    WitnessSearch ws;
    ws.seed = s.seed;
    ws.trials = s.trials;
    ws.max_points = s.max_points;
    ws.tol = s.tol;
    np = search_np_witness(spec, base, ws);
    if (!np) {
      r.body = json{{"kernel", spec.name()}, {"base", io::point_to_json(base)}, {"witness_found", false},
                    {"trials", s.trials}, {"evidence_only", true}, {"seed", s.seed}};
      r.text = "no failing point set in " + std::to_string(s.trials) + " random trials\n";
      return r;
    }
  }
  r.body = io::to_json(*np);
  r.csv = matrix_csv(np->schur_matrix);
  if (np->verdict) {
    r.text = "np-test " + spec.name() + ": " + verdict_text(*np->verdict);
    if (np->evidence_only) r.text += "PSD on finitely many points is evidence only\n";
  } else {
    r.text = "np-test " + spec.name() + ": kernel vanishes at " + std::to_string(np->kernel_zero_pairs.size()) +
             " pair(s), no verdict\n";
  }
  return r;
}

Report run_np_oracle(const Settings& s) {
  const auto spec = require_kernel(s);
  if (s.order < 1) throw ValidationError("--order must be >= 1");
  const auto v = diagonal_np_oracle(spec, s.order);
  Report r;
  r.body = io::to_json(v);
  r.passed = v.np_at_order;
  std::ostringstream os;
  os << "np-oracle " << spec.name() << " order " << s.order << ": ";
  if (v.first_failing_index)
    os << "not complete Pick, c_" << *v.first_failing_index << " = "
       << to_string(v.series.coeffs[static_cast<std::size_t>(*v.first_failing_index)]) << " > 0\n";
  else
    os << "c_n <= 0 for n = 1.." << s.order << "\n";
  r.text = os.str();
  return r;
}

Report run_gram(const Settings& s) {
  const auto spec = require_kernel(s);
  const auto pts = require_points(s);
  const auto g = s.base.empty() ? gram(spec, pts) : compress_gram(spec, pts, origin_or(s.base, spec.dimension()));
  const auto v = psd_check(g, s.tol);
  Report r;
  r.body = json{{"kernel", spec.name()},
                {"compressed", !s.base.empty()},
                {"matrix", io::matrix_to_json(g.entries())},
                {"verdict", io::to_json(v)}};
  r.csv = matrix_csv(g.entries());
  r.text = "gram " + spec.name() + " (" + std::to_string(g.size()) + " points): " + verdict_text(v);
  return r;
}

Report run_douglas(const Settings& s) {
  const auto a = io::matrix_from_json(json_argument(s.a, "--a"));
  const auto b = io::matrix_from_json(json_argument(s.b, "--b"));
  const auto f = douglas_solve(a, b, s.tol);
  Report r;
  r.body = io::to_json(f);
  r.csv = matrix_csv(f.solution);
  r.passed = f.feasible;
  std::ostringstream os;
  os << "douglas-solve: " << (f.feasible ? "feasible" : "infeasible") << ", rank " << f.rank << ", residual "
     << fmt_double(f.residual) << ", ||X|| = " << fmt_double(f.solution_norm) << "\n"
     << "majorization: " << verdict_text(f.majorization);
  if (f.borderline) os << "warning: rank decision is within two decades of the cut-off\n";
  if (!f.contract_holds) os << "warning: majorized but no contractive solution found\n";
  r.text = os.str();
  return r;
}

Report run_corona(const Settings& s) {
  const auto spec = require_kernel(s);
  const auto pts = require_points(s);
  const auto phi = io::polynomial_matrix_from_json(json_argument(s.phi, "--phi"));
  const auto psi = io::polynomial_matrix_from_json(json_argument(s.psi, "--psi"));
  const auto m = corona_block_matrix(phi, psi, spec, pts);
  const auto v = psd_check(m, s.tol);
  Report r;
  r.body = json{{"kernel", spec.name()}, {"verdict", io::to_json(v)}, {"block_matrix", io::matrix_to_json(m)}};
  r.csv = matrix_csv(m);
  r.passed = v.is_psd;
  r.text = "corona-check " + spec.name() + ": " + verdict_text(v);
  return r;
}

Report run_identity(const Settings& s) {
  const auto id = parse_identity(s.lemma);
  if (!id) throw ParseError("unknown --lemma '" + s.lemma + "' (expected 4.1, 4.2 or 4.3)");
  const int degree = s.degree > 0 ? s.degree : s.n + 8;
  const auto rep = verify_identity(*id, s.n, degree);
  Report r;
  r.body = io::to_json(rep);
  r.passed = rep.exact_zero && rep.min_diagonal >= 0;
  std::ostringstream os;
  os << "identity " << identity_id(*id) << " N=" << s.n << " D=" << degree << ": "
     << (rep.exact_zero ? "exact" : "DEFECT") << " on " << rep.checked.size() << " monomials, min diagonal "
     << to_string(rep.min_diagonal) << "\n";
  if (!rep.defect_entries.empty()) {
    os << "row\tcolumn\tdefect\n";
    const auto mono = [](const Exponent& e) {
      std::string out = "(";
      for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
      return out + ")";
    };
    for (const auto& d : rep.defect_entries) os << mono(d.row) << "\t" << mono(d.column) << "\t" << to_string(d.value) << "\n";
  }
  r.text = os.str();
  return r;
}

Report run_counterexample(const Settings& s) {
  MinimalNormOptions o;
  o.degree_bound = s.degree_bound > 0 ? s.degree_bound : s.n;
  o.grid = s.grid;
  o.iterations = s.iterations;
  o.seed = s.seed;
  const auto cert = minimal_norm_solve(s.n, o);
  Report r;
  r.body = io::to_json(cert);
  r.passed = cert.optimal;
  r.text = "counterexample N=" + std::to_string(s.n) + ": lower bound " + fmt_double(cert.operator_norm_lower_bound) +
           ", achieved " + fmt_double(cert.achieved_norm) + (cert.optimal ? " (optimal)\n" : "\n");
  return r;
}

Report run_growth(const Settings& s) {
  const auto rows = growth_report(s.n_max, s.degree_bound, s.grid, s.seed);
  Report r;
  r.body = io::to_json(rows);
  r.csv = io::growth_csv(rows);
  r.text = r.csv;
  for (const auto& row : rows) r.passed = r.passed && row.optimal;
  return r;
}

json setting_value(const std::string& name, const Settings& s) {
  if (name == "kernel") return s.kernel.empty() ? json(nullptr) : io::kernel_to_json(io::kernel_from_argument(s.kernel));
  if (name == "points") return s.points;
  if (name == "base") return s.base;
  if (name == "format") return s.format;
  if (name == "lemma") return s.lemma;
  if (name == "phi") return s.phi;
  if (name == "psi") return s.psi;
  if (name == "a") return s.a;
  if (name == "b") return s.b;
  if (name == "tol") return s.tol;
  if (name == "seed") return s.seed;
  if (name == "expect-pass") return s.expect_pass;
  if (name == "n") return s.n;
  if (name == "degree") return s.degree;
  if (name == "order") return s.order;
  if (name == "n-max") return s.n_max;
  if (name == "degree-bound") return s.degree_bound;
  if (name == "grid") return s.grid;
  if (name == "iterations") return s.iterations;
  if (name == "trials") return s.trials;
  if (name == "max-points") return s.max_points;
  return nullptr;
}

json config_json(const std::string& command, const Settings& s, const CLI::App& sub) {
  json c{{"command", command}};
  for (const auto* opt : sub.get_options()) {
    const auto name = opt->get_single_name();
    if (name == "help" || name == "config" || name == "output") continue;
    c[name] = setting_value(name, s);
  }
  return c;
}

void apply_config(CLI::App& sub, const json& config, const std::string& command) {
  if (!config.is_object()) throw ParseError("--config must hold a JSON object");
  for (const auto& [key, value] : config.items()) {
    if (key == "command") {
      if (value != command) throw ParseError("config is for command '" + value.dump() + "', not '" + command + "'");
      continue;
    }
    auto* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) throw ParseError("config key '" + key + "' is not an option of " + command);
    if (opt->count() > 0) continue;
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    opt->add_result(text);
    opt->run_callback();
  }
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw ParseError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ParseError("cannot move report into '" + path + "': " + ec.message());
  }
}

std::string render(const Report& r, const json& config, const std::string& command, const Settings& s) {
  const std::string header = std::string("rkhs_douglas ") + RKHS_VERSION + " " + command + " seed=" + std::to_string(s.seed);
  if (s.format == "json") {
    json out{{"tool", "rkhs_douglas"}, {"version", RKHS_VERSION}, {"seed", s.seed}, {"config", config}, {"result", r.body}};
    return out.dump(2) + "\n";
  }
  if (s.format == "csv") {
    if (r.csv.empty()) throw ParseError("--format csv is not available for " + command);
    return "# " + header + "\n# config " + config.dump() + "\n" + r.csv;
  }
  return "# " + header + "\n# config " + config.dump() + "\n" + r.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reproducing-kernel and Douglas-factorization toolkit"};
  app.set_version_flag("--version", std::string(RKHS_VERSION));
  app.require_subcommand(1);
  Settings s;

  const auto common = [&](CLI::App* sub, bool with_tol) {
    sub->add_option("--output,-o", s.output, "Report path (stdout when omitted)");
    sub->add_option("--format", s.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--config", s.config, "JSON file of option values; flags take precedence");
    sub->add_option("--seed", s.seed, "Random seed (falls back to RKHS_DOUGLAS_SEED)");
    sub->add_flag("--expect-pass", s.expect_pass, "Exit 2 when the check does not pass");
    if (with_tol) sub->add_option("--tol", s.tol, "Tolerance")->check(CLI::PositiveNumber);
  };
  const auto kernel_opt = [&](CLI::App* sub) {
    sub->add_option("--kernel", s.kernel, "Builtin name, JSON object or JSON file");
  };

  auto* np = app.add_subcommand("np-test", "Complete Pick test on a point set");
  common(np, true);
  kernel_opt(np);
  np->add_option("--points", s.points, "CSV file of points; random search when omitted");
  np->add_option("--base", s.base, "Base point re,im[,re,im]; default 0");
  np->add_option("--trials", s.trials, "Random trials when searching")->check(CLI::PositiveNumber);
  np->add_option("--max-points", s.max_points, "Largest random set size")->check(CLI::Range(2, 64));

  auto* oracle = app.add_subcommand("np-oracle", "Reciprocal-series test for diagonal kernels");
  common(oracle, false);
  kernel_opt(oracle);
  oracle->add_option("--order", s.order, "Highest coefficient checked");

  auto* gr = app.add_subcommand("gram", "Gram matrix (compressed when --base is given)");
  common(gr, true);
  kernel_opt(gr);
  gr->add_option("--points", s.points, "CSV file of points");
  gr->add_option("--base", s.base, "Base point re,im[,re,im]");

  auto* dg = app.add_subcommand("douglas-solve", "Solve A X = B with minimal norm");
  common(dg, true);
  dg->add_option("--a", s.a, "Matrix A: JSON rows of [re, im] or a file");
  dg->add_option("--b", s.b, "Matrix B: JSON rows of [re, im] or a file");

  auto* co = app.add_subcommand("corona-check", "Positivity of (Phi Phi* - Psi Psi*) k on a point set");
  common(co, true);
  kernel_opt(co);
  co->add_option("--points", s.points, "CSV file of points");
  co->add_option("--phi", s.phi, "Polynomial matrix Phi: JSON or a file");
  co->add_option("--psi", s.psi, "Polynomial matrix Psi: JSON or a file");

  auto* vi = app.add_subcommand("verify-identity", "Exact shift-operator identity check");
  common(vi, false);
  vi->add_option("--lemma", s.lemma, "4.1 (Bergman), 4.2 (bidisk) or 4.3 (ball)");
  vi->add_option("--n", s.n, "Order N")->check(CLI::PositiveNumber);
  vi->add_option("--degree", s.degree, "Truncation degree D (default N + 8)");

  auto* ce = app.add_subcommand("counterexample", "Minimal-norm solution of A_N C = B_N");
  common(ce, false);
  ce->add_option("--n", s.n, "Order N")->check(CLI::PositiveNumber);
  ce->add_option("--degree-bound", s.degree_bound, "Degree bound of the search (default N)");
  ce->add_option("--grid", s.grid, "Torus grid size per variable")->check(CLI::PositiveNumber);
  ce->add_option("--iterations", s.iterations, "Descent iterations")->check(CLI::NonNegativeNumber);

  auto* gw = app.add_subcommand("growth-report", "Norm growth of the counterexample family");
  common(gw, false);
  gw->add_option("--n-max", s.n_max, "Largest N")->check(CLI::PositiveNumber);
  gw->add_option("--degree-bound", s.degree_bound, "Degree bound (default N for each row)");
  gw->add_option("--grid", s.grid, "Torus grid size per variable")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (!s.config.empty()) apply_config(*sub, io::read_json_file(s.config), command);
    if (sub->get_option("--seed")->count() == 0) {
      if (const char* env = std::getenv("RKHS_DOUGLAS_SEED")) {
        try {
          std::size_t used = 0;
          s.seed = std::stoull(env, &used);
          if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
          throw ParseError(std::string("RKHS_DOUGLAS_SEED is not an unsigned integer: '") + env + "'");
        }
      }
    }
    if (!(s.tol > 0)) throw ParseError("--tol must be positive");
    if (s.format.empty()) s.format = command == "growth-report" ? "csv" : "json";

    Report r;
    if (command == "np-test") r = run_np_test(s);
    else if (command == "np-oracle") r = run_np_oracle(s);
    else if (command == "gram") r = run_gram(s);
    else if (command == "douglas-solve") r = run_douglas(s);
    else if (command == "corona-check") r = run_corona(s);
    else if (command == "verify-identity") r = run_identity(s);
    else if (command == "counterexample") r = run_counterexample(s);
    else r = run_growth(s);

    const auto out = render(r, config_json(command, s, *sub), command, s);
    if (s.output.empty()) std::cout << out;
    else write_atomically(s.output, out);
    if (s.expect_pass && !r.passed) return kExitFailedExpectation;
    return kExitOk;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
