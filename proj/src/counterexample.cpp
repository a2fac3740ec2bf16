// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#include "rkhs/counterexample.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/SVD>

namespace rkhs {

namespace {

using Poly = Polynomial<Rational>;

void check_order(int n) {
  if (n < 1) throw ValidationError("counterexample order N must be >= 1");
}

// A's first-row entry k (0-based): 1 for k = 0, z^{N-k+1} w^k otherwise.
Exponent a_exponent(int n, int k) { return k == 0 ? Exponent{0, 0} : Exponent{n - k + 1, k}; }
// B's first-row entry k (0-based): z^{N-k} w^k.
Exponent b_exponent(int n, int k) { return {n - k, k}; }

}  // namespace

CounterexampleInstance build_counterexample(int n) {
  check_order(n);
  CounterexampleInstance inst{n, PolynomialMatrixq(n + 1, n + 1, 2), PolynomialMatrixq(n + 1, n + 1, 2)};
  for (int k = 0; k <= n; ++k) {
    inst.a.set(0, k, Poly::monomial(a_exponent(n, k)));
    inst.b.set(0, k, Poly::monomial(b_exponent(n, k)));
  }
  return inst;
}

PolynomialMatrixq canonical_solution(int n) { return build_counterexample(n).b; }

std::vector<bool> forced_coefficient_check(int n, const PolynomialMatrixq& c) {
  check_order(n);
  if (c.rows() != n + 1 || c.cols() != n + 1 || c.variable_count() != 2)
    throw ShapeError("solution must be an (N+1) x (N+1) matrix in two variables");
  const auto inst = build_counterexample(n);
  PolynomialMatrixq residual = inst.a * c - inst.b;
  if (!residual.is_zero()) {
    std::string first;
    for (int k = 0; k <= n && first.empty(); ++k)
      if (!residual(0, k).is_zero()) first = "entry (1," + std::to_string(k + 1) + "): " + residual(0, k).to_string();
    throw NotASolutionError("C does not solve A C = B; residual " + first, std::move(residual));
  }
  std::vector<bool> out;
  for (int k = 0; k <= n; ++k) out.push_back(c(0, k).coefficient(b_exponent(n, k)) == 1);
  return out;
}

NormCertificate norm_lower_bound(int n) {
  check_order(n);
  NormCertificate cert;
  cert.n = n;
  cert.l2_lower_bound = Rational(n + 1);
  cert.operator_norm_lower_bound = std::sqrt(static_cast<double>(n + 1));
  return cert;
}

double torus_sup_norm(const PolynomialMatrixd& c, int grid) {
  if (grid < 1) throw ValidationError("torus grid size must be positive");
  if (c.variable_count() != 2) throw ShapeError("torus evaluation needs a two-variable matrix");
  double best = 0.0;
  Eigen::VectorXcd pt(2);
  for (int a = 0; a < grid; ++a) {
    pt(0) = std::polar(1.0, 2.0 * std::numbers::pi * a / grid);
    for (int b = 0; b < grid; ++b) {
      pt(1) = std::polar(1.0, 2.0 * std::numbers::pi * b / grid);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c(pt));
      best = std::max(best, svd.singularValues()(0));
    }
  }
  return best;
}

namespace {

// One free real coefficient: C_{row, col} += theta * z^e0 w^e1, with the
// first row compensating by -theta * a_row * z^e0 w^e1.
struct Parameter {
  int row;
  int col;
  Exponent e;
};

std::vector<Parameter> free_parameters(int n, int degree_bound) {
  std::vector<Parameter> params;
  const int room = degree_bound - (n + 1);
  if (room < 0) return params;
  for (int row = 1; row <= n; ++row)
    for (int col = 0; col <= n; ++col)
      for (int d = 0; d <= room; ++d)
        for (int b = 0; b <= d; ++b) params.push_back({row, col, {d - b, b}});
  return params;
}

PolynomialMatrixq assemble(int n, const std::vector<Parameter>& params, const std::vector<double>& theta) {
  PolynomialMatrixq c = canonical_solution(n);
  for (std::size_t p = 0; p < params.size(); ++p) {
    if (theta[p] == 0.0) continue;
    const Rational t = rational_from_double(theta[p]);
    const auto& par = params[p];
    Poly lower = c(par.row, par.col);
    lower.add_term(par.e, t);
    c.set(par.row, par.col, std::move(lower));
    Exponent shifted = par.e;
    const Exponent a = a_exponent(n, par.row);
    shifted[0] += a[0];
    shifted[1] += a[1];
    Poly first = c(0, par.col);
    first.add_term(std::move(shifted), -t);
    c.set(0, par.col, std::move(first));
  }
  return c;
}

// Grid supremum of the largest singular value and a subgradient with respect
// to theta at the maximizing grid point.
double sup_and_subgradient(int n, const std::vector<Parameter>& params, const PolynomialMatrixd& c,
                           const std::vector<Eigen::VectorXcd>& samples, std::vector<double>& grad) {
  double best = -1.0;
  Eigen::VectorXcd u, v, at;
  for (const auto& pt : samples) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c(pt), Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues()(0) > best) {
      best = svd.singularValues()(0);
      u = svd.matrixU().col(0);
      v = svd.matrixV().col(0);
      at = pt;
    }
  }
  grad.assign(params.size(), 0.0);
  for (std::size_t p = 0; p < params.size(); ++p) {
    const auto& par = params[p];
    const cdouble mono = std::pow(at(0), par.e[0]) * std::pow(at(1), par.e[1]);
    const Exponent a = a_exponent(n, par.row);
    const cdouble a_val = std::pow(at(0), a[0]) * std::pow(at(1), a[1]);
    // d sigma = Re(u^* dC v)
    const cdouble d = std::conj(u(par.row)) * mono * v(par.col) - std::conj(u(0)) * a_val * mono * v(par.col);
    grad[p] = d.real();
  }
  return best;
}

}  // namespace

NormCertificate minimal_norm_solve(int n, const MinimalNormOptions& options) {
  check_order(n);
  if (options.degree_bound < n)
    throw ValidationError("degree bound " + std::to_string(options.degree_bound) + " is below N = " +
                          std::to_string(n) + "; no polynomial solution exists");
  if (options.grid <= options.degree_bound)
    throw ValidationError("torus grid must be finer than the degree bound");

  NormCertificate cert = norm_lower_bound(n);
  cert.degree_bound = options.degree_bound;
  cert.grid = options.grid;
  cert.seed = options.seed;

  const auto params = free_parameters(n, options.degree_bound);
  std::vector<double> best_theta(params.size(), 0.0);

  if (!params.empty()) {
    const int g = std::max(options.search_grid, options.degree_bound + 2);
    std::vector<Eigen::VectorXcd> samples;
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b) {
        Eigen::VectorXcd pt(2);
        pt << std::polar(1.0, 2.0 * std::numbers::pi * a / g), std::polar(1.0, 2.0 * std::numbers::pi * b / g);
        samples.push_back(pt);
      }
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> start(-0.5, 0.5);
    std::vector<double> theta(params.size());
    for (auto& t : theta) t = start(rng);

    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> grad;
    for (int it = 0; it < options.iterations; ++it) {
      const auto c = assemble(n, params, theta).to_complex();
      const double value = sup_and_subgradient(n, params, c, samples, grad);
      if (value < best_value) {
        best_value = value;
        best_theta = theta;
      }
      double gnorm = 0.0;
      for (double gp : grad) gnorm += gp * gp;
      gnorm = std::sqrt(gnorm);
      if (gnorm == 0.0) break;
      const double step = 0.5 / std::sqrt(1.0 + it);
      for (std::size_t p = 0; p < theta.size(); ++p) theta[p] -= step * grad[p] / gnorm;
    }
  }

  const PolynomialMatrixq canonical = canonical_solution(n);
  const double canonical_norm = torus_sup_norm(canonical.to_complex(), options.grid);
  PolynomialMatrixq chosen = canonical;
  double chosen_norm = canonical_norm;
  if (!params.empty()) {
    PolynomialMatrixq searched = assemble(n, params, best_theta);
    const double searched_norm = torus_sup_norm(searched.to_complex(), options.grid);
    if (searched_norm < canonical_norm) {
      chosen = std::move(searched);
      chosen_norm = searched_norm;
    }
  }

  // Exactness of the row equation; throws if assembly went wrong.
  (void)forced_coefficient_check(n, chosen);
  cert.achieved_norm = chosen_norm;
  cert.achieved_l2 = Rational(0);
  for (int k = 0; k <= n; ++k) cert.achieved_l2 += chosen(0, k).torus_l2_norm_squared();
  cert.achieving_solution = std::move(chosen);
  cert.optimal = std::abs(cert.achieved_norm - cert.operator_norm_lower_bound) <= options.tol;
  return cert;
}

std::vector<GrowthRow> growth_report(int n_max, int degree_bound, int grid, std::uint64_t seed) {
  if (n_max < 1) throw ValidationError("n_max must be >= 1");
  std::vector<GrowthRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    MinimalNormOptions o;
    o.degree_bound = std::max(n, degree_bound);
    o.grid = grid;
    o.seed = seed;
    const auto cert = minimal_norm_solve(n, o);
    rows.push_back({n, cert.operator_norm_lower_bound, cert.achieved_norm, cert.optimal});
  }
  return rows;
}

}  // namespace rkhs
