// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#include "rkhs/shift.hpp"

#include <algorithm>

namespace rkhs {

std::string_view shift_space_name(ShiftSpace s) {
  switch (s) {
    case ShiftSpace::bergman_disk:
      return "bergman_disk";
    case ShiftSpace::hardy_bidisk:
      return "hardy_bidisk";
    case ShiftSpace::hardy_ball2:
      return "hardy_ball2";
  }
  return "unknown";
}

std::optional<ShiftSpace> parse_shift_space(std::string_view name) {
  for (auto s : {ShiftSpace::bergman_disk, ShiftSpace::hardy_bidisk, ShiftSpace::hardy_ball2})
    if (shift_space_name(s) == name) return s;
  return std::nullopt;
}

int variable_count(ShiftSpace s) { return s == ShiftSpace::bergman_disk ? 1 : 2; }

namespace {

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Exponent> monomial_basis(ShiftSpace space, int max_degree) {
  std::vector<Exponent> basis;
  for (int d = 0; d <= max_degree; ++d) {
    if (variable_count(space) == 1) {
      basis.push_back({d});
    } else {
      for (int b = 0; b <= d; ++b) basis.push_back({d - b, b});
    }
  }
  return basis;
}

}  // namespace

Rational monomial_weight(ShiftSpace s, const Exponent& e) {
  switch (s) {
    case ShiftSpace::bergman_disk:
      return Rational(1, e[0] + 1);
    case ShiftSpace::hardy_bidisk:
      return Rational(1);
    case ShiftSpace::hardy_ball2:
      return factorial(e[0]) * factorial(e[1]) / factorial(e[0] + e[1] + 1);
  }
  return Rational(0);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational c(1);
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

SparseMatrixq weighted_adjoint(const SparseMatrixq& m, const VectorXq& weights) {
  SparseMatrixq t = m.transpose();
  for (Eigen::Index col = 0; col < t.outerSize(); ++col)
    for (SparseMatrixq::InnerIterator it(t, col); it; ++it)
      it.valueRef() = it.value() * weights(it.col()) / weights(it.row());
  return t;
}

SparseMatrixq OperatorModel::adjoint() const { return weighted_adjoint(matrix, weights); }

OperatorModel build_shift(ShiftSpace space, int variable, int max_degree) {
  if (max_degree < 1) throw ValidationError("shift model needs max_degree >= 1");
  if (variable < 0 || variable >= variable_count(space))
    throw ValidationError("variable index out of range for " + std::string(shift_space_name(space)));

  OperatorModel m;
  m.space = space;
  m.variable = variable;
  m.max_degree = max_degree;
  m.basis = monomial_basis(space, max_degree);
  const auto n = m.size();
  m.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& e = m.basis[static_cast<std::size_t>(i)];
    m.basis_index.emplace(e, i);
    m.weights(i) = monomial_weight(space, e);
    if (total_degree(e) <= max_degree - 1) m.exact_rows.push_back(i);
  }

  std::vector<Eigen::Triplet<Rational>> triplets;
  for (Eigen::Index j = 0; j < n; ++j) {
    Exponent target = m.basis[static_cast<std::size_t>(j)];
    target[static_cast<std::size_t>(variable)] += 1;
    if (auto it = m.basis_index.find(target); it != m.basis_index.end())
      triplets.emplace_back(it->second, j, Rational(1));
  }
  m.matrix.resize(n, n);
  m.matrix.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

std::string_view identity_id(ShiftIdentity id) {
  switch (id) {
    case ShiftIdentity::bergman:
      return "4.1";
    case ShiftIdentity::bidisk:
      return "4.2";
    case ShiftIdentity::ball:
      return "4.3";
  }
  return "unknown";
}

std::optional<ShiftIdentity> parse_identity(std::string_view text) {
  if (text == "4.1" || text == "bergman") return ShiftIdentity::bergman;
  if (text == "4.2" || text == "bidisk") return ShiftIdentity::bidisk;
  if (text == "4.3" || text == "ball") return ShiftIdentity::ball;
  return std::nullopt;
}

ShiftSpace identity_space(ShiftIdentity id) {
  switch (id) {
    case ShiftIdentity::bergman:
      return ShiftSpace::bergman_disk;
    case ShiftIdentity::bidisk:
      return ShiftSpace::hardy_bidisk;
    case ShiftIdentity::ball:
      return ShiftSpace::hardy_ball2;
  }
  return ShiftSpace::bergman_disk;
}

namespace {

// coefficient * S^p W^q W*^q S*^p
struct Term {
  Rational coefficient;
  int p;
  int q;
};

std::vector<Term> identity_terms(ShiftIdentity id, int n) {
  std::vector<Term> terms;
  switch (id) {
    case ShiftIdentity::bergman:
      terms.push_back({Rational(n), n + 1, 0});
      terms.push_back({Rational(-(n + 1)), n, 0});
      break;
    case ShiftIdentity::bidisk:
      for (int j = 1; j <= n; ++j) terms.push_back({Rational(1), j, n - j + 1});
      for (int j = 0; j <= n; ++j) terms.push_back({Rational(-1), j, n - j});
      break;
    case ShiftIdentity::ball:
      for (int j = 0; j <= n + 1; ++j) terms.push_back({Rational(n) * binomial(n + 1, j), n + 1 - j, j});
      for (int j = 0; j <= n; ++j) terms.push_back({Rational(-(n + 1)) * binomial(n, j), n - j, j});
      break;
  }
  return terms;
}

SparseMatrixq sparse_identity(Eigen::Index n) {
  SparseMatrixq id(n, n);
  id.setIdentity();
  return id;
}

SparseMatrixq power(const SparseMatrixq& m, int k, std::map<int, SparseMatrixq>& cache) {
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  SparseMatrixq r = k == 0 ? sparse_identity(m.rows()) : SparseMatrixq(m * power(m, k - 1, cache));
  cache.emplace(k, r);
  return r;
}

}  // namespace

SparseMatrixq identity_operator(ShiftIdentity id, int n, const std::vector<OperatorModel>& shifts) {
  if (shifts.empty()) throw ValidationError("no shift models supplied");
  const auto& s = shifts[0];
  const Eigen::Index size = s.size();
  std::map<int, SparseMatrixq> s_pow, w_pow;
  SparseMatrixq total = sparse_identity(size);
  for (const auto& t : identity_terms(id, n)) {
    SparseMatrixq x = power(s.matrix, t.p, s_pow);
    if (t.q > 0) {
      if (shifts.size() < 2) throw ValidationError("identity needs the second shift");
      x = x * power(shifts[1].matrix, t.q, w_pow);
    }
    const SparseMatrixq term = x * weighted_adjoint(x, s.weights);
    total = total + t.coefficient * term;
  }
  return total;
}

IdentityReport verify_identity(ShiftIdentity id, int n, int max_degree) {
  if (n < 1) throw ValidationError("identity order N must be >= 1");
  if (max_degree < n + 2)
    throw TruncationError("degree " + std::to_string(max_degree) + " too small for N = " + std::to_string(n) +
                          "; need at least N + 2");
  const ShiftSpace space = identity_space(id);
  std::vector<OperatorModel> shifts;
  for (int v = 0; v < variable_count(space); ++v) shifts.push_back(build_shift(space, v, max_degree));
  const auto& model = shifts[0];
  const SparseMatrixq op = identity_operator(id, n, shifts);

  IdentityReport r;
  r.identity = id;
  r.n = n;
  r.max_degree = max_degree;
  r.diagonal = true;
  bool first = true;
  const int exact_limit = max_degree - n - 1;
  for (Eigen::Index col = 0; col < model.size(); ++col) {
    const auto& e = model.basis[static_cast<std::size_t>(col)];
    if (total_degree(e) > exact_limit) continue;
    r.checked.push_back(e);
    const VectorXq column = op.col(col);
    const Rational diag = column(col);
    for (Eigen::Index row = 0; row < column.size(); ++row) {
      if (row != col && column(row) != 0) r.diagonal = false;
      const Rational expected = (row == col && total_degree(e) <= n - 1) ? Rational(1) : Rational(0);
      if (column(row) != expected)
        r.defect_entries.push_back({model.basis[static_cast<std::size_t>(row)], e, column(row) - expected});
    }
    r.diagonal_entries.push_back(diag);
    if (first || diag < r.min_diagonal) r.min_diagonal = diag;
    first = false;
  }
  r.exact_zero = r.defect_entries.empty();
  return r;
}

namespace {

using Poly = Polynomial<Rational>;

Poly mono(int vars, int a, int b = 0) {
  Exponent e(static_cast<std::size_t>(vars), 0);
  e[0] = a;
  if (vars > 1) e[1] = b;
  return Poly::monomial(std::move(e));
}

}  // namespace

bool poly_identity_check(ShiftIdentity id, int n) {
  if (n < 1) throw ValidationError("identity order N must be >= 1");
  switch (id) {
    case ShiftIdentity::bergman: {
      Poly lhs = mono(1, 0) + Rational(n) * mono(1, n + 1) - Rational(n + 1) * mono(1, n);
      Poly one_minus_x = mono(1, 0) - mono(1, 1);
      Poly sum(1);
      for (int j = 0; j < n; ++j) sum += Rational(j + 1) * mono(1, j);
      return lhs == one_minus_x * one_minus_x * sum;
    }
    case ShiftIdentity::bidisk: {
      Poly lhs = mono(2, 0, 0);
      for (int j = 1; j <= n; ++j) lhs += mono(2, n - j + 1, j);
      for (int j = 0; j <= n; ++j) lhs -= mono(2, n - j, j);
      Poly sum(2);
      for (int j = 0; j < n; ++j)
        for (int p = 0; p < n - j; ++p) sum += mono(2, j, p);
      const Poly rhs = (mono(2, 0, 0) - mono(2, 1, 0)) * (mono(2, 0, 0) - mono(2, 0, 1)) * sum;
      return lhs == rhs;
    }
    case ShiftIdentity::ball:
      break;
  }
  throw UnsupportedVariantError("the ball identity has no scalar generating-function check");
}

std::vector<Rational> bergman_generating_quotient(int n) {
  if (n < 1) throw ValidationError("identity order N must be >= 1");
  std::vector<Rational> p(static_cast<std::size_t>(n) + 2, Rational(0));
  p[0] = 1;
  p[static_cast<std::size_t>(n)] = -(n + 1);
  p[static_cast<std::size_t>(n) + 1] = n;
  for (int pass = 0; pass < 2; ++pass) {
    // Division by (1 - x): q_k = p_0 + ... + p_k, remainder = sum of all p_i.
    std::vector<Rational> q(p.size() - 1);
    Rational acc(0);
    for (std::size_t k = 0; k < q.size(); ++k) {
      acc += p[k];
      q[k] = acc;
    }
    if (acc + p.back() != 0) throw Error("numerator is not divisible by (1 - x)^2");
    p = std::move(q);
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace rkhs
