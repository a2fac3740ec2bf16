// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "rkhs/kernel.hpp"
#include "rkhs/pick.hpp"
#include "rkhs/polynomial.hpp"

namespace rkhs {

/// Relative cut-off for singular values and for the range-inclusion test.
inline constexpr double kDefaultRankTolerance = 1e-10;

/// Solution of A X = B with its certificates.
struct FactorizationResult {
  /// Minimal operator-norm solution V S^+ U^* B (least-squares solution when
  /// infeasible).
  Eigen::MatrixXcd solution;
  /// ||A X - B||, largest singular value.
  double residual = 0.0;
  /// ||X||, largest singular value.
  double solution_norm = 0.0;
  /// A A^* - B B^* is PSD at the tolerance.
  bool majorized = false;
  /// range(B) is contained in range(A).
  bool feasible = false;
  /// A singular value sits within two decades of the rank cut-off, so the
  /// rank (and hence feasibility) could flip under perturbation.
  bool borderline = false;
  /// majorized implies feasible and solution_norm <= 1 + tol.
  bool contract_holds = false;
  Eigen::Index rank = 0;
  PsdVerdict majorization;
};

/// Largest singular value.
double operator_norm(const Eigen::MatrixXcd& m);

/// Positivity of A A^* - B B^*.
PsdVerdict majorization_check(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                              double tol = kDefaultPsdTolerance);

/// Finite-dimensional Douglas factorization: AX = B with X of least norm.
/// Throws ShapeError when the row counts differ.
FactorizationResult douglas_solve(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                  double tol = kDefaultRankTolerance);

/// Block matrix [(Phi(z_i) Phi(z_j)^* - Psi(z_i) Psi(z_j)^*) k(z_i, z_j)]_{ij}.
/// Each block is rows(Phi) x rows(Phi).
Eigen::MatrixXcd corona_block_matrix(const PolynomialMatrixd& phi, const PolynomialMatrixd& psi,
                                     const KernelSpec& spec, const PointSetd& pts);

/// Compression of M_Phi M_Phi^* - M_Psi M_Psi^* to the kernel sections at
/// `pts`. Non-PSD refutes the operator inequality; PSD is evidence only.
PsdVerdict corona_condition_check(const PolynomialMatrixd& phi, const PolynomialMatrixd& psi,
                                  const KernelSpec& spec, const PointSetd& pts,
                                  double tol = kDefaultPsdTolerance);

}  // namespace rkhs
