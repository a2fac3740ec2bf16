// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rkhs/errors.hpp"
#include "rkhs/rational.hpp"

namespace rkhs {

/// Exponent vector of a monomial z_1^e_1 ... z_n^e_n.
using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

/// Sparse multivariate polynomial with coefficients in `Coeff` (Rational for
/// exact work, std::complex<double> for numerics). Zero coefficients are
/// never stored.
template <class Coeff>
class Polynomial {
 public:
  using Terms = std::map<Exponent, Coeff>;

  explicit Polynomial(int variable_count = 1) : vars_(variable_count) {
    if (variable_count < 1) throw ValidationError("polynomial needs at least one variable");
  }

  static Polynomial constant(int variable_count, const Coeff& c) {
    Polynomial p(variable_count);
    p.add_term(Exponent(static_cast<std::size_t>(variable_count), 0), c);
    return p;
  }

  static Polynomial monomial(Exponent e, const Coeff& c = Coeff(1)) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
  }

  int variable_count() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Exponent e, const Coeff& c) {
    if (static_cast<int>(e.size()) != vars_) throw ShapeError("monomial has wrong number of variables");
    for (int v : e)
      if (v < 0) throw ValidationError("negative exponent");
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) it->second += c;
    if (it->second == Coeff(0)) terms_.erase(it);
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }

  friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
    Polynomial out(p.vars_);
    if (s == Coeff(0)) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Value at a complex point.
  std::complex<double> operator()(const Eigen::VectorXcd& z) const {
    if (z.size() != vars_) throw ShapeError("evaluation point has wrong dimension");
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms_) {
      std::complex<double> m = to_complex(c);
      for (int i = 0; i < vars_; ++i) m *= std::pow(z(i), e[static_cast<std::size_t>(i)]);
      s += m;
    }
    return s;
  }

  /// Squared L^2 norm on the torus, i.e. the sum of squared coefficient
  /// moduli (monomials are orthonormal there).
  auto torus_l2_norm_squared() const {
    if constexpr (std::is_same_v<Coeff, Rational>) {
      Rational s(0);
      for (const auto& [e, c] : terms_) s += c * c;
      return s;
    } else {
      double s = 0.0;
      for (const auto& [e, c] : terms_) s += std::norm(to_complex(c));
      return s;
    }
  }

  std::string to_string() const;

 private:
  void check_vars(const Polynomial& o) const {
    if (o.vars_ != vars_) throw ShapeError("polynomials have different variable counts");
  }

  int vars_;
  Terms terms_;
};

/// Rows x cols matrix of polynomials in a common set of variables.
template <class Coeff>
class PolynomialMatrix {
 public:
  PolynomialMatrix(Eigen::Index rows, Eigen::Index cols, int variable_count)
      : rows_(rows), cols_(cols), vars_(variable_count),
        entries_(static_cast<std::size_t>(rows * cols), Polynomial<Coeff>(variable_count)) {
    if (rows < 1 || cols < 1) throw ShapeError("polynomial matrix must be non-empty");
  }

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  int variable_count() const { return vars_; }

  const Polynomial<Coeff>& operator()(Eigen::Index i, Eigen::Index j) const { return entries_[index(i, j)]; }

  void set(Eigen::Index i, Eigen::Index j, Polynomial<Coeff> p) {
    if (p.variable_count() != vars_) throw ShapeError("entry has wrong number of variables");
    entries_[index(i, j)] = std::move(p);
  }

  /// Largest total degree over all entries.
  int degree() const {
    int d = -1;
    for (const auto& p : entries_) d = std::max(d, p.degree());
    return d;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.is_zero(); });
  }

  friend PolynomialMatrix operator*(const PolynomialMatrix& a, const PolynomialMatrix& b) {
    if (a.cols_ != b.rows_ || a.vars_ != b.vars_) throw ShapeError("polynomial matrix product shape mismatch");
    PolynomialMatrix out(a.rows_, b.cols_, a.vars_);
    for (Eigen::Index i = 0; i < a.rows_; ++i)
      for (Eigen::Index j = 0; j < b.cols_; ++j) {
        Polynomial<Coeff> s(a.vars_);
        for (Eigen::Index k = 0; k < a.cols_; ++k) {
          if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
          s += a(i, k) * b(k, j);
        }
        out.set(i, j, std::move(s));
      }
    return out;
  }

  friend PolynomialMatrix operator-(const PolynomialMatrix& a, const PolynomialMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.vars_ != b.vars_)
      throw ShapeError("polynomial matrix difference shape mismatch");
    PolynomialMatrix out(a);
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
  }

  /// Value at a complex point.
  Eigen::MatrixXcd operator()(const Eigen::VectorXcd& z) const {
    Eigen::MatrixXcd m(rows_, cols_);
    for (Eigen::Index i = 0; i < rows_; ++i)
      for (Eigen::Index j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j)(z);
    return m;
  }

  /// Same matrix with coefficients converted to complex doubles.
  PolynomialMatrix<std::complex<double>> to_complex() const {
    PolynomialMatrix<std::complex<double>> out(rows_, cols_, vars_);
    for (Eigen::Index i = 0; i < rows_; ++i)
      for (Eigen::Index j = 0; j < cols_; ++j) {
        Polynomial<std::complex<double>> p(vars_);
        for (const auto& [e, c] : (*this)(i, j).terms()) p.add_term(e, rkhs::to_complex(c));
        out.set(i, j, std::move(p));
      }
    return out;
  }

 private:
  std::size_t index(Eigen::Index i, Eigen::Index j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw ShapeError("polynomial matrix index out of range");
    return static_cast<std::size_t>(i * cols_ + j);
  }

  Eigen::Index rows_;
  Eigen::Index cols_;
  int vars_;
  std::vector<Polynomial<Coeff>> entries_;
};

template <class Coeff>
std::string Polynomial<Coeff>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    if constexpr (std::is_same_v<Coeff, Rational>) {
      out += rkhs::to_string(c);
    } else {
      const auto z = to_complex(c);
      out += "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
    }
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) out += "*z" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return out;
}

using PolynomialMatrixq = PolynomialMatrix<Rational>;
using PolynomialMatrixd = PolynomialMatrix<std::complex<double>>;

}  // namespace rkhs
