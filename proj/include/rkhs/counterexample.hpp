// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rkhs/errors.hpp"
#include "rkhs/polynomial.hpp"
#include "rkhs/rational.hpp"

namespace rkhs {

/// Bidisk row data for order N, as (N+1) x (N+1) polynomial matrices in (z, w)
/// with only the first row nonzero:
///   A = [1, z^N w, z^{N-1} w^2, ..., z w^N]
///   B = [z^N, z^{N-1} w, ..., w^N]
/// A A^* - B B^* is the projection onto polynomials of degree <= N-1, yet
/// every solution of A C = B has norm at least sqrt(N+1).
struct CounterexampleInstance {
  int n = 0;
  PolynomialMatrixq a;
  PolynomialMatrixq b;
};

CounterexampleInstance build_counterexample(int n);

/// First row equal to B's first row, other rows zero.
PolynomialMatrixq canonical_solution(int n);

/// Raised when a candidate does not satisfy A C = B exactly.
class NotASolutionError : public DomainError {
 public:
  NotASolutionError(const std::string& what, PolynomialMatrixq residual)
      : DomainError(what), residual_(std::move(residual)) {}
  const PolynomialMatrixq& residual() const { return residual_; }

 private:
  PolynomialMatrixq residual_;
};

/// For k = 1..N+1, whether the coefficient of z^{N-k+1} w^{k-1} in C_{1k}
/// equals 1. Any exact solution passes every check: the other terms of the
/// row equation are multiples of monomials of degree N+1.
/// Throws NotASolutionError (carrying A C - B) if C is not a solution.
std::vector<bool> forced_coefficient_check(int n, const PolynomialMatrixq& c);

struct NormCertificate {
  int n = 0;
  /// N+1: the forced unit coefficients bound sum_k ||C_{1k}||^2 on the torus.
  Rational l2_lower_bound{0};
  /// sqrt(N+1): the torus mean of sum_k |C_{1k}|^2 is at most the squared
  /// supremum of the symbol's norm.
  double operator_norm_lower_bound = 0.0;
  double achieved_norm = 0.0;
  /// sum_k ||C_{1k}||^2 for the achieving solution, exact.
  Rational achieved_l2{0};
  std::optional<PolynomialMatrixq> achieving_solution;
  bool optimal = false;
  int degree_bound = 0;
  int grid = 0;
  std::uint64_t seed = 0;
};

/// Bounds only; achieving fields left empty.
NormCertificate norm_lower_bound(int n);

/// Largest singular value of C(z, w) maximized over the uniform grid
/// {(e^{2 pi i a/G}, e^{2 pi i b/G})}. A grid finer than the degree samples
/// the torus mean exactly, so the result never undercuts the L^2 bound.
double torus_sup_norm(const PolynomialMatrixd& c, int grid);

struct MinimalNormOptions {
  int degree_bound = 0;
  int grid = 256;
  /// Grid used inside the descent loop; raised to degree_bound + 2 if smaller.
  int search_grid = 12;
  int iterations = 150;
  std::uint64_t seed = 0;
  double tol = 1e-10;
};

/// Searches the affine family of exact solutions with entries of total degree
/// <= degree_bound (free lower rows, first row forced) by subgradient descent
/// on the grid supremum from a seeded random start, and returns the better of
/// that result and the canonical solution. Throws ValidationError when
/// degree_bound < N or grid <= degree_bound.
NormCertificate minimal_norm_solve(int n, const MinimalNormOptions& options);

inline NormCertificate minimal_norm_solve(int n, int degree_bound, int torus_grid_size) {
  MinimalNormOptions o;
  o.degree_bound = degree_bound;
  o.grid = torus_grid_size;
  return minimal_norm_solve(n, o);
}

struct GrowthRow {
  int n = 0;
  double lower_bound = 0.0;
  double achieved_norm = 0.0;
  bool optimal = false;
};

/// One row per N = 1..n_max; each N uses degree bound max(N, degree_bound).
std::vector<GrowthRow> growth_report(int n_max, int degree_bound = 0, int grid = 256, std::uint64_t seed = 0);

}  // namespace rkhs
