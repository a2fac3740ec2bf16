// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#include "rkhs/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace rkhs::io {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return rational_from_decimal_double(j.get<double>());
  throw ParseError("expected a rational number, got " + j.dump());
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  throw ParseError("expected a number, got " + j.dump());
}

cdouble complex_from_json(const json& j) {
  if (j.is_array() && j.size() == 2) return {number_from_json(j[0]), number_from_json(j[1])};
  if (j.is_number() || j.is_string()) return {number_from_json(j), 0.0};
  throw ParseError("expected a complex number as [re, im], got " + j.dump());
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stod(s, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == s.size();
}

json exponent_to_json(const Exponent& e) { return json(e); }

}  // namespace

KernelSpec kernel_from_json(const json& j) {
  if (j.is_string()) {
    if (auto b = parse_builtin(j.get<std::string>())) return KernelSpec::builtin(*b);
    throw ParseError("unknown kernel '" + j.get<std::string>() + "'");
  }
  if (!j.is_object() || !j.contains("variant")) throw ParseError("kernel spec must be an object with a 'variant'");
  const auto variant = j.at("variant").get<std::string>();
  KernelSpec spec = [&] {
    if (variant == "diagonal") {
      if (!j.contains("coeffs") || !j.at("coeffs").is_array())
        throw ParseError("diagonal kernel needs a 'coeffs' array");
      std::vector<Rational> coeffs;
      for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
      const double radius = j.contains("domain_radius") ? number_from_json(j.at("domain_radius")) : 1.0;
      const int dim = j.contains("dimension") ? j.at("dimension").get<int>() : 1;
      return KernelSpec::diagonal(std::move(coeffs), radius, dim);
    }
    if (variant == "product") {
      if (!j.contains("left") || !j.contains("right")) throw ParseError("product kernel needs 'left' and 'right'");
      return KernelSpec::product(kernel_from_json(j.at("left")), kernel_from_json(j.at("right")));
    }
    if (auto b = parse_builtin(variant)) return KernelSpec::builtin(*b);
    throw ParseError("unknown kernel variant '" + variant + "'");
  }();
  if (j.contains("dimension") && j.at("dimension").get<int>() != spec.dimension())
    throw ValidationError("kernel '" + variant + "' has dimension " + std::to_string(spec.dimension()) +
                          ", spec declares " + j.at("dimension").dump());
  return spec;
}

json kernel_to_json(const KernelSpec& spec) {
  json j;
  switch (spec.kind()) {
    case KernelSpec::Kind::builtin:
      j["variant"] = std::string(builtin_name(spec.as_builtin()));
      break;
    case KernelSpec::Kind::diagonal: {
      j["variant"] = "diagonal";
      json c = json::array();
      for (const auto& a : spec.as_diagonal().coeffs) c.push_back(to_string(a));
      j["coeffs"] = c;
      j["domain_radius"] = spec.as_diagonal().domain_radius;
      break;
    }
    case KernelSpec::Kind::product:
      j["variant"] = "product";
      j["left"] = kernel_to_json(*spec.as_product().left);
      j["right"] = kernel_to_json(*spec.as_product().right);
      break;
  }
  j["dimension"] = spec.dimension();
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

KernelSpec kernel_from_argument(const std::string& arg) {
  if (auto b = parse_builtin(arg)) return KernelSpec::builtin(*b);
  const auto t = trim(arg);
  if (!t.empty() && t.front() == '{') {
    try {
      return kernel_from_json(json::parse(t));
    } catch (const json::exception& e) {
      throw ParseError(std::string("kernel JSON: ") + e.what());
    }
  }
  std::ifstream probe(arg);
  if (!probe) throw ParseError("unknown kernel '" + arg + "' (not a builtin name, JSON object or file)");
  try {
    return kernel_from_json(read_json_file(arg));
  } catch (const json::exception& e) {
    throw ParseError(arg + ": " + e.what());
  }
}

PointSetd read_points_csv(std::istream& in) {
  std::vector<Pointd> points;
  std::vector<std::string> labels;
  std::string line;
  int line_no = 0;
  bool any_label = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_commas(line);
    std::string label;
    double probe = 0.0;
    if (fields.size() % 2 == 1 && !parse_double(fields.back(), probe)) {
      label = fields.back();
      fields.pop_back();
    }
    std::vector<double> values;
    bool numeric = !fields.empty();
    for (const auto& f : fields) {
      double v = 0.0;
      if (!parse_double(f, v)) {
        numeric = false;
        break;
      }
      values.push_back(v);
    }
    if (!numeric) {
      if (points.empty() && labels.empty()) continue;  // header
      throw ParseError("points line " + std::to_string(line_no) + ": non-numeric field");
    }
    if (values.size() % 2 != 0 || values.empty())
      throw ParseError("points line " + std::to_string(line_no) + ": expected re,im pairs");
    Pointd p(static_cast<Eigen::Index>(values.size() / 2));
    for (Eigen::Index i = 0; i < p.size(); ++i)
      p(i) = cdouble(values[static_cast<std::size_t>(2 * i)], values[static_cast<std::size_t>(2 * i + 1)]);
    if (!points.empty() && p.size() != points.front().size())
      throw ParseError("points line " + std::to_string(line_no) + ": dimension differs from first point");
    any_label = any_label || !label.empty();
    labels.push_back(label);
    points.push_back(std::move(p));
  }
  if (points.empty()) throw ParseError("points file contains no points");
  if (!any_label) labels.clear();
  return PointSetd(std::move(points), std::move(labels));
}

PointSetd read_points_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open points file '" + path + "'");
  try {
    return read_points_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Pointd parse_point(const std::string& text) {
  const auto fields = split_commas(text);
  if (fields.empty() || fields.size() % 2 != 0) throw ParseError("point '" + text + "' must be re,im[,re,im...]");
  Pointd p(static_cast<Eigen::Index>(fields.size() / 2));
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double re = 0.0, im = 0.0;
    if (!parse_double(fields[static_cast<std::size_t>(2 * i)], re) ||
        !parse_double(fields[static_cast<std::size_t>(2 * i + 1)], im))
      throw ParseError("point '" + text + "' has a non-numeric coordinate");
    p(i) = cdouble(re, im);
  }
  return p;
}

json complex_to_json(const cdouble& z) { return json::array({z.real(), z.imag()}); }

json point_to_json(const Pointd& p) {
  json j = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) j.push_back(complex_to_json(p(i)));
  return j;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw ParseError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ShapeError("matrix row " + std::to_string(r) + " has the wrong length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

PolynomialMatrixd polynomial_matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("entries"))
    throw ParseError("polynomial matrix needs 'variables' and 'entries'");
  const int vars = j.at("variables").get<int>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.empty() || !entries[0].is_array() || entries[0].empty())
    throw ParseError("'entries' must be a non-empty array of rows");
  PolynomialMatrixd m(static_cast<Eigen::Index>(entries.size()), static_cast<Eigen::Index>(entries[0].size()), vars);
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (entries[r].size() != entries[0].size()) throw ShapeError("polynomial matrix rows differ in length");
    for (std::size_t c = 0; c < entries[r].size(); ++c) {
      Polynomial<cdouble> p(vars);
      const auto& terms = entries[r][c];
      if (!terms.is_array()) throw ParseError("polynomial entry must be an array of terms");
      for (const auto& t : terms) {
        auto e = t.at("exp").get<Exponent>();
        if (static_cast<int>(e.size()) != vars) throw ShapeError("term exponent has wrong length");
        p.add_term(std::move(e), complex_from_json(t.at("coef")));
      }
      m.set(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c), std::move(p));
    }
  }
  return m;
}

json polynomial_matrix_to_json(const PolynomialMatrixq& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      json terms = json::array();
      for (const auto& [e, coef] : m(r, c).terms())
        terms.push_back(json{{"exp", exponent_to_json(e)}, {"coef", to_string(coef)}});
      row.push_back(terms);
    }
    entries.push_back(row);
  }
  return json{{"variables", m.variable_count()}, {"entries", entries}};
}

json to_json(const PsdVerdict& v) {
  json w = json::array();
  for (Eigen::Index i = 0; i < v.witness.size(); ++i) w.push_back(complex_to_json(v.witness(i)));
  return json{{"is_psd", v.is_psd}, {"min_eigenvalue", v.min_eigenvalue}, {"tolerance", v.tolerance}, {"witness", w}};
}

json to_json(const NpReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(point_to_json(p));
  json zeros = json::array();
  for (const auto& [i, j] : r.kernel_zero_pairs) zeros.push_back(json::array({i, j}));
  json out{{"kernel", r.kernel}, {"base", point_to_json(r.base_point)}, {"points", pts}};
  if (r.verdict) {
    out["min_eigenvalue"] = r.verdict->min_eigenvalue;
    out["is_psd"] = r.verdict->is_psd;
    out["verdict"] = to_json(*r.verdict);
  } else {
    out["min_eigenvalue"] = nullptr;
    out["is_psd"] = nullptr;
    out["verdict"] = nullptr;
  }
  out["evidence_only"] = r.evidence_only;
  out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  out["kernel_zero_pairs"] = zeros;
  out["schur_matrix"] = matrix_to_json(r.schur_matrix);
  return out;
}

json to_json(const ReciprocalSeries& s) {
  json c = json::array();
  for (const auto& v : s.coeffs) c.push_back(to_string(v));
  return json{{"order", s.order}, {"coeffs", c}, {"positive_part", s.positive_part}, {"negative_part", s.negative_part}};
}

json to_json(const OracleVerdict& v) {
  return json{{"np_at_order", v.np_at_order},
              {"first_failing_index", v.first_failing_index ? json(*v.first_failing_index) : json(nullptr)},
              {"evidence_only", v.np_at_order},
              {"reciprocal_series", to_json(v.series)}};
}

json to_json(const FactorizationResult& r) {
  return json{{"feasible", r.feasible},
              {"majorized", r.majorized},
              {"borderline", r.borderline},
              {"contract_holds", r.contract_holds},
              {"rank", r.rank},
              {"residual", r.residual},
              {"solution_norm", r.solution_norm},
              {"majorization", to_json(r.majorization)},
              {"solution", matrix_to_json(r.solution)}};
}

json to_json(const IdentityReport& r) {
  json defects = json::array();
  for (const auto& d : r.defect_entries)
    defects.push_back(json{{"row", exponent_to_json(d.row)}, {"column", exponent_to_json(d.column)},
                           {"value", to_string(d.value)}});
  json diag = json::array();
  for (std::size_t i = 0; i < r.checked.size(); ++i)
    diag.push_back(json{{"monomial", exponent_to_json(r.checked[i])}, {"value", to_string(r.diagonal_entries[i])}});
  return json{{"lemma_id", std::string(identity_id(r.identity))},
              {"space", std::string(shift_space_name(identity_space(r.identity)))},
              {"N", r.n},
              {"max_degree", r.max_degree},
              {"exact_zero", r.exact_zero},
              {"diagonal", r.diagonal},
              {"min_diagonal", to_string(r.min_diagonal)},
              {"checked_monomials", r.checked.size()},
              {"defect_entries", defects},
              {"diagonal_entries", diag}};
}

json to_json(const NormCertificate& c) {
  json out{{"N", c.n},
           {"l2_lower_bound", to_string(c.l2_lower_bound)},
           {"operator_norm_lower_bound", c.operator_norm_lower_bound},
           {"achieved_norm", c.achieved_norm},
           {"achieved_l2", to_string(c.achieved_l2)},
           {"optimal", c.optimal},
           {"degree_bound", c.degree_bound},
           {"grid", c.grid},
           {"seed", c.seed},
           {"note", "the forced-coefficient chain bounds the squared norm by N+1, so the certified "
                    "norm bound is sqrt(N+1), not N+1"}};
  out["achieving_solution"] = c.achieving_solution ? polynomial_matrix_to_json(*c.achieving_solution) : json(nullptr);
  return out;
}

json to_json(const std::vector<GrowthRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back(json{{"N", r.n}, {"lower_bound", r.lower_bound}, {"achieved_norm", r.achieved_norm},
                       {"optimal", r.optimal}});
  return out;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "N,lower_bound,achieved_norm,optimal\n" << std::setprecision(17);
  for (const auto& r : rows)
    os << r.n << "," << r.lower_bound << "," << r.achieved_norm << "," << (r.optimal ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace rkhs::io
