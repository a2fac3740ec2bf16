// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "rkhs/polynomial.hpp"
#include "rkhs/rational.hpp"

namespace rkhs {

/// Function spaces with a weighted monomial basis.
///
///   bergman_disk  A^2(D),     ||z^j||^2     = 1/(j+1)
///   hardy_bidisk  H^2(D^2),   ||z^a w^b||^2 = 1
///   hardy_ball2   H^2(B^2),   ||z^a w^b||^2 = a! b! / (a+b+1)!
enum class ShiftSpace { bergman_disk, hardy_bidisk, hardy_ball2 };

std::string_view shift_space_name(ShiftSpace s);
std::optional<ShiftSpace> parse_shift_space(std::string_view name);

/// Number of variables of the space (1 or 2).
int variable_count(ShiftSpace s);

/// Squared norm of z^a w^b (w-exponent ignored for the disk).
Rational monomial_weight(ShiftSpace s, const Exponent& e);

using SparseMatrixq = Eigen::SparseMatrix<Rational>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Truncated multiplication operator in the *unnormalized* monomial basis of
/// total degree <= D. Multiplying a degree-D monomial leaves the model, so
/// that column is zero; columns of degree <= D-1 are exact.
struct OperatorModel {
  ShiftSpace space;
  int variable = 0;
  int max_degree = 0;
  /// Basis monomials, ordered by total degree, then by w-exponent.
  std::vector<Exponent> basis;
  std::map<Exponent, Eigen::Index> basis_index;
  SparseMatrixq matrix;
  /// weights[i] = ||basis[i]||^2.
  VectorXq weights;
  std::vector<Eigen::Index> exact_rows;

  Eigen::Index size() const { return static_cast<Eigen::Index>(basis.size()); }

  /// Adjoint for the weighted inner product <f, g> = sum f_i conj(g_i) w_i:
  /// (M^*)_{ij} = M_{ji} w_j / w_i.
  SparseMatrixq adjoint() const;
};

/// Multiplication by coordinate `variable` (0 for z, 1 for w) on `space`,
/// truncated at total degree `max_degree` >= 1.
OperatorModel build_shift(ShiftSpace space, int variable, int max_degree);

/// Weighted adjoint of any operator on the basis of `model`.
SparseMatrixq weighted_adjoint(const SparseMatrixq& m, const VectorXq& weights);

/// The three positivity identities for shifts:
///   bergman  I + N B^{N+1} B*^{N+1} - (N+1) B^N B*^N
///   bidisk   I + sum_{j=1..N} S^j W^{N-j+1} W*^{N-j+1} S*^j
///              - sum_{j=0..N} S^j W^{N-j} W*^{N-j} S*^j
///   ball     I + sum_{j=0..N+1} N C(N+1,j) S^{N+1-j} W^j W*^j S*^{N+1-j}
///              - sum_{j=0..N} (N+1) C(N,j) S^{N-j} W^j W*^j S*^{N-j}
/// each expected to equal the projection onto monomials of degree <= N-1.
enum class ShiftIdentity { bergman, bidisk, ball };

/// Identifier used in reports and on the command line ("4.1", "4.2", "4.3").
std::string_view identity_id(ShiftIdentity id);
std::optional<ShiftIdentity> parse_identity(std::string_view text);
ShiftSpace identity_space(ShiftIdentity id);

struct DefectEntry {
  Exponent row;
  Exponent column;
  Rational value;
};

struct IdentityReport {
  ShiftIdentity identity;
  int n = 0;
  int max_degree = 0;
  /// Operator minus projection vanishes on every exact column.
  bool exact_zero = false;
  std::vector<DefectEntry> defect_entries;
  /// Smallest diagonal entry of the operator over exact columns.
  Rational min_diagonal{0};
  /// Operator has no off-diagonal entries in exact columns.
  bool diagonal = false;
  /// Monomials whose column was checked.
  std::vector<Exponent> checked;
  /// Diagonal entry of the operator at each checked monomial.
  std::vector<Rational> diagonal_entries;
};

/// Evaluates the identity for `n` in a model of total degree `max_degree`,
/// checking columns of degree <= max_degree - n - 1. Throws TruncationError
/// when max_degree < n + 2 and ValidationError when n < 1.
IdentityReport verify_identity(ShiftIdentity id, int n, int max_degree);

inline IdentityReport verify_bergman_identity(int n, int d) { return verify_identity(ShiftIdentity::bergman, n, d); }
inline IdentityReport verify_bidisk_identity(int n, int d) { return verify_identity(ShiftIdentity::bidisk, n, d); }
inline IdentityReport verify_ball_identity(int n, int d) { return verify_identity(ShiftIdentity::ball, n, d); }

/// The sparse operator of the identity (without subtracting the projection).
SparseMatrixq identity_operator(ShiftIdentity id, int n, const std::vector<OperatorModel>& shifts);

/// Generating-function form of the bergman and bidisk identities, checked by
/// exact coefficient comparison:
///   1 + N x^{N+1} - (N+1) x^N = (1-x)^2 sum_{j<N} (j+1) x^j
///   1 + sum_{j=1..N} x^{N-j+1} y^j - sum_{j=0..N} x^{N-j} y^j
///       = (1-x)(1-y) sum_{j<N} sum_{p<N-j} x^j y^p
/// The ball identity has no scalar form here; asking for it throws.
bool poly_identity_check(ShiftIdentity id, int n);

/// Quotient of 1 + N x^{N+1} - (N+1) x^N by (1-x)^2, computed by exact
/// synthetic division. Throws Error if the division leaves a remainder.
std::vector<Rational> bergman_generating_quotient(int n);

/// Binomial coefficient as an exact integer.
Rational binomial(int n, int k);

}  // namespace rkhs
