// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#include "rkhs/douglas.hpp"

#include <algorithm>

#include <Eigen/SVD>

namespace rkhs {

double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

PsdVerdict majorization_check(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows())
    throw ShapeError("A has " + std::to_string(a.rows()) + " rows, B has " + std::to_string(b.rows()));
  Eigen::MatrixXcd d = a * a.adjoint() - b * b.adjoint();
  // Rounding leaves d Hermitian only up to a few ulps.
  d = (d + d.adjoint()).eval() / 2.0;
  return psd_check(HermitianMatrixd(d), tol);
}

FactorizationResult douglas_solve(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows())
    throw ShapeError("A has " + std::to_string(a.rows()) + " rows, B has " + std::to_string(b.rows()));
  if (a.size() == 0 || b.cols() == 0) throw ShapeError("empty operand");

  FactorizationResult r;
  r.majorization = majorization_check(a, b);
  r.majorized = r.majorization.is_psd;

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const double cutoff = tol * sigma_max;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff && sigma(i) > 0.0) ++rank;
    if (sigma_max > 0.0 && sigma(i) > cutoff / 100.0 && sigma(i) < cutoff * 100.0) r.borderline = true;
  }
  r.rank = rank;

  const Eigen::MatrixXcd u_r = svd.matrixU().leftCols(rank);
  const Eigen::MatrixXcd v_r = svd.matrixV().leftCols(rank);
  const Eigen::MatrixXcd coords = u_r.adjoint() * b;
  Eigen::MatrixXcd scaled = coords;
  for (Eigen::Index i = 0; i < rank; ++i) scaled.row(i) /= sigma(i);
  r.solution = v_r * scaled;

  // Part of B outside range(A).
  const double b_norm = operator_norm(b);
  const double outside = operator_norm(b - u_r * coords);
  const double threshold = tol * std::max({1.0, b_norm, sigma_max});
  r.feasible = outside <= threshold;
  if (outside > threshold / 100.0 && outside < threshold * 100.0) r.borderline = true;

  r.residual = operator_norm(a * r.solution - b);
  r.solution_norm = operator_norm(r.solution);
  const double slack = std::max(tol, r.majorization.tolerance);
  r.contract_holds = !r.majorized || (r.feasible && r.solution_norm <= 1.0 + slack);
  return r;
}

Eigen::MatrixXcd corona_block_matrix(const PolynomialMatrixd& phi, const PolynomialMatrixd& psi,
                                     const KernelSpec& spec, const PointSetd& pts) {
  if (phi.rows() != psi.rows()) throw ShapeError("Phi and Psi must have the same number of rows");
  if (phi.variable_count() != spec.dimension() || psi.variable_count() != spec.dimension())
    throw ShapeError("multiplier variable count does not match kernel dimension");
  check_in_domain(spec, pts);

  const Eigen::Index r = phi.rows();
  const auto n = static_cast<Eigen::Index>(pts.size());
  std::vector<Eigen::MatrixXcd> phi_at(pts.size()), psi_at(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    phi_at[i] = phi(pts[i]);
    psi_at[i] = psi(pts[i]);
  }
  Eigen::MatrixXcd m(n * r, n * r);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
      const cdouble k = detail::eval_unchecked(spec, pts[si], pts[sj]);
      Eigen::MatrixXcd block =
          (phi_at[si] * phi_at[sj].adjoint() - psi_at[si] * psi_at[sj].adjoint()) * k;
      if (i == j) block = ((block + block.adjoint()) / 2.0).eval();
      m.block(i * r, j * r, r, r) = block;
      if (i != j) m.block(j * r, i * r, r, r) = block.adjoint();
    }
  }
  return m;
}

PsdVerdict corona_condition_check(const PolynomialMatrixd& phi, const PolynomialMatrixd& psi,
                                  const KernelSpec& spec, const PointSetd& pts, double tol) {
  return psd_check(HermitianMatrixd(corona_block_matrix(phi, psi, spec, pts)), tol);
}

}  // namespace rkhs
