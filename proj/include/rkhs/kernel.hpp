// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "rkhs/errors.hpp"
#include "rkhs/rational.hpp"

namespace rkhs {

/// Points must lie at least this far inside the open domain.
inline constexpr double kDomainMargin = 1e-12;

/// Closed-form kernels.
///
///   szego_disk    1/(1 - z conj(w))                   on the disk
///   bergman_disk  1/(1 - z conj(w))^2                 on the disk
///   hardy_bidisk  1/((1 - z1 conj(w1))(1 - z2 conj(w2)))  on the bidisk
///   hardy_ball2   1/(1 - <z, w>)^2                    on the unit ball of C^2
///   fock_plane    exp(z conj(w))                      on the plane
///   example51     1 + 2 z conj(w) / (1 - z conj(w))   on the disk
enum class Builtin { szego_disk, bergman_disk, hardy_bidisk, hardy_ball2, fock_plane, example51 };

std::string_view builtin_name(Builtin b);
std::optional<Builtin> parse_builtin(std::string_view name);

/// Symbolic description of a reproducing kernel. Immutable.
///
/// A diagonal kernel is the polynomial sum_{n<=M} a_n <z, w>^n on the open
/// Euclidean ball of radius `domain_radius`; a product kernel acts on the
/// concatenated coordinates of its factors.
class KernelSpec {
 public:
  enum class Kind { builtin, diagonal, product };

  struct Diagonal {
    std::vector<Rational> coeffs;
    double domain_radius;
    int dimension;
  };
  struct Product {
    std::shared_ptr<const KernelSpec> left;
    std::shared_ptr<const KernelSpec> right;
  };

  static KernelSpec builtin(Builtin b);
  /// Throws ValidationError unless a_0 > 0, all a_n >= 0 and radius > 0.
  static KernelSpec diagonal(std::vector<Rational> coeffs, double domain_radius, int dimension = 1);
  static KernelSpec product(KernelSpec left, KernelSpec right);

  Kind kind() const;
  int dimension() const { return dimension_; }
  std::string name() const;

  Builtin as_builtin() const { return std::get<Builtin>(data_); }
  const Diagonal& as_diagonal() const { return std::get<Diagonal>(data_); }
  const Product& as_product() const { return std::get<Product>(data_); }

 private:
  using Data = std::variant<Builtin, Diagonal, Product>;
  KernelSpec(Data data, int dimension) : data_(std::move(data)), dimension_(dimension) {}

  Data data_;
  int dimension_;
};

template <class Scalar>
using Point = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Pointd = Point<cdouble>;
using Pointq = Point<Complexq>;

/// Finite subset of the kernel's domain.
template <class Scalar>
class PointSet {
 public:
  /// Throws ValidationError when empty, ragged or containing duplicates.
  explicit PointSet(std::vector<Point<Scalar>> points, std::vector<std::string> labels = {})
      : points_(std::move(points)), labels_(std::move(labels)) {
    if (points_.empty()) throw ValidationError("point set is empty");
    if (!labels_.empty() && labels_.size() != points_.size())
      throw ValidationError("label count does not match point count");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].size() != points_[0].size()) throw ValidationError("points have differing dimension");
      for (std::size_t j = 0; j < i; ++j)
        if (points_[i] == points_[j])
          throw ValidationError("duplicate point at indices " + std::to_string(j) + " and " + std::to_string(i));
    }
  }

  std::size_t size() const { return points_.size(); }
  int dimension() const { return static_cast<int>(points_[0].size()); }
  const Point<Scalar>& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point<Scalar>>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<Point<Scalar>> points_;
  std::vector<std::string> labels_;
};

using PointSetd = PointSet<cdouble>;
using PointSetq = PointSet<Complexq>;

/// Square matrix with entries(i, j) == conj(entries(j, i)).
template <class Scalar>
class HermitianMatrix {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  /// Throws ValidationError if `m` is not square or deviates from its
  /// conjugate transpose by more than `tol` (scaled by the largest entry;
  /// exact scalars must match exactly). The stored matrix is symmetrized.
  explicit HermitianMatrix(Matrix m, double tol = 1e-12);

  Eigen::Index size() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  const Scalar& operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

 private:
  Matrix entries_;
};

using HermitianMatrixd = HermitianMatrix<cdouble>;
using HermitianMatrixq = HermitianMatrix<Complexq>;

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

inline bool strictly_inside(double squared_norm, double radius) {
  return std::sqrt(squared_norm) < radius - kDomainMargin;
}
inline bool strictly_inside(const Rational& squared_norm, double radius) {
  const Rational r = rational_from_double(radius);
  return squared_norm < r * r;
}

inline double squared_modulus(const cdouble& z) { return std::norm(z); }
inline Rational squared_modulus(const Complexq& z) { return norm(z); }

inline cdouble conjugate(const cdouble& z) { return std::conj(z); }
inline Complexq conjugate(const Complexq& z) { return conj(z); }

template <class Scalar>
Scalar inner(const Point<Scalar>& z, const Point<Scalar>& w) {
  Scalar s(0);
  for (Eigen::Index i = 0; i < z.size(); ++i) s += z(i) * conjugate(w(i));
  return s;
}

template <class Scalar>
auto squared_norm(const Point<Scalar>& z) {
  decltype(squared_modulus(z(0))) s(0);
  for (Eigen::Index i = 0; i < z.size(); ++i) s += squared_modulus(z(i));
  return s;
}

template <class Scalar>
bool inside_domain(const KernelSpec& spec, const Point<Scalar>& z) {
  switch (spec.kind()) {
    case KernelSpec::Kind::builtin:
      switch (spec.as_builtin()) {
        case Builtin::fock_plane:
          return true;
        case Builtin::hardy_ball2:
          return strictly_inside(squared_norm(z), 1.0);
        default:
          for (Eigen::Index i = 0; i < z.size(); ++i)
            if (!strictly_inside(squared_modulus(z(i)), 1.0)) return false;
          return true;
      }
    case KernelSpec::Kind::diagonal:
      return strictly_inside(squared_norm(z), spec.as_diagonal().domain_radius);
    case KernelSpec::Kind::product: {
      const auto& p = spec.as_product();
      const Eigen::Index dl = p.left->dimension();
      return inside_domain<Scalar>(*p.left, z.head(dl)) &&
             inside_domain<Scalar>(*p.right, z.tail(z.size() - dl));
    }
  }
  return false;
}

}  // namespace detail

/// Throws DomainError (ConvergenceError for diagonal kernels) unless `z` has
/// the kernel's dimension and lies strictly inside its domain.
template <class Scalar>
void check_in_domain(const KernelSpec& spec, const Point<Scalar>& z) {
  if (z.size() != spec.dimension())
    throw DomainError("point has dimension " + std::to_string(z.size()) + ", kernel " + spec.name() +
                      " expects " + std::to_string(spec.dimension()));
  if (detail::inside_domain(spec, z)) return;
  if (spec.kind() == KernelSpec::Kind::diagonal)
    throw ConvergenceError("point outside the disk of convergence of " + spec.name());
  throw DomainError("point outside the domain of " + spec.name());
}

template <class Scalar>
void check_in_domain(const KernelSpec& spec, const PointSet<Scalar>& pts) {
  for (const auto& p : pts.points()) check_in_domain(spec, p);
}

namespace detail {

template <class Scalar>
Scalar eval_unchecked(const KernelSpec& spec, const Point<Scalar>& z, const Point<Scalar>& w) {
  const Scalar one(1);
  switch (spec.kind()) {
    case KernelSpec::Kind::builtin: {
      switch (spec.as_builtin()) {
        case Builtin::szego_disk:
          return one / (one - z(0) * conjugate(w(0)));
        case Builtin::bergman_disk: {
          const Scalar d = one - z(0) * conjugate(w(0));
          return one / (d * d);
        }
        case Builtin::hardy_bidisk:
          return one / ((one - z(0) * conjugate(w(0))) * (one - z(1) * conjugate(w(1))));
        case Builtin::hardy_ball2: {
          const Scalar d = one - inner(z, w);
          return one / (d * d);
        }
        case Builtin::fock_plane:
          if constexpr (is_exact_v<Scalar>) {
            throw UnsupportedVariantError("fock_plane has no exact rational evaluation");
          } else {
            return std::exp(z(0) * conjugate(w(0)));
          }
        case Builtin::example51: {
          const Scalar x = z(0) * conjugate(w(0));
          return one + Scalar(2) * x / (one - x);
        }
      }
      break;
    }
    case KernelSpec::Kind::diagonal: {
      const auto& coeffs = spec.as_diagonal().coeffs;
      const Scalar x = inner(z, w);
      Scalar acc(0);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + from_rational<Scalar>(*it);
      return acc;
    }
    case KernelSpec::Kind::product: {
      const auto& p = spec.as_product();
      const Eigen::Index dl = p.left->dimension();
      const Eigen::Index dr = z.size() - dl;
      const Point<Scalar> zl = z.head(dl), wl = w.head(dl), zr = z.tail(dr), wr = w.tail(dr);
      return eval_unchecked(*p.left, zl, wl) * eval_unchecked(*p.right, zr, wr);
    }
  }
  throw UnsupportedVariantError("unknown kernel variant");
}

}  // namespace detail

/// k(z, w). Both points are validated against the kernel's domain.
template <class Scalar>
Scalar kernel_eval(const KernelSpec& spec, const Point<Scalar>& z, const Point<Scalar>& w) {
  check_in_domain(spec, z);
  check_in_domain(spec, w);
  return detail::eval_unchecked(spec, z, w);
}

namespace detail {

template <class Scalar>
Scalar real_part(const Scalar& s) {
  if constexpr (std::is_same_v<Scalar, Complexq>) {
    return Complexq(s.re);
  } else {
    return Scalar(s.real());
  }
}

// Fills the upper triangle with f(i, j) and mirrors it, so the result is
// conjugate-symmetric bit for bit.
template <class Scalar, class F>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> hermitian_fill(Eigen::Index n, F&& f) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = real_part(f(i, i));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      m(i, j) = f(i, j);
      m(j, i) = conjugate(m(i, j));
    }
  }
  return m;
}

}  // namespace detail

/// Gram matrix [k(p_i, p_j)].
template <class Scalar>
HermitianMatrix<Scalar> gram(const KernelSpec& spec, const PointSet<Scalar>& pts) {
  check_in_domain(spec, pts);
  const auto n = static_cast<Eigen::Index>(pts.size());
  return HermitianMatrix<Scalar>(detail::hermitian_fill<Scalar>(
      n, [&](Eigen::Index i, Eigen::Index j) { return detail::eval_unchecked(spec, pts[i], pts[j]); }));
}

/// Gram matrix of the kernel sections projected off k(., base):
///   k(p_i, p_j) - k(p_i, base) k(base, p_j) / k(base, base).
template <class Scalar>
HermitianMatrix<Scalar> compress_gram(const KernelSpec& spec, const PointSet<Scalar>& pts,
                                      const Point<Scalar>& base) {
  check_in_domain(spec, pts);
  check_in_domain(spec, base);
  const Scalar kbb = detail::eval_unchecked(spec, base, base);
  if (kbb == Scalar(0)) throw DegenerateBaseError("k(base, base) vanishes");
  const auto n = static_cast<Eigen::Index>(pts.size());
  std::vector<Scalar> kb(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) kb[i] = detail::eval_unchecked(spec, pts[i], base);
  return HermitianMatrix<Scalar>(detail::hermitian_fill<Scalar>(n, [&](Eigen::Index i, Eigen::Index j) {
    return detail::eval_unchecked(spec, pts[i], pts[j]) - kb[i] * detail::conjugate(kb[j]) / kbb;
  }));
}

// ---------------------------------------------------------------------------
// Power-series view

/// Coefficients a_0..a_M of k = sum a_n <z, w>^n for kernels that are
/// functions of the inner product (every builtin except hardy_bidisk, and
/// every diagonal spec). Throws UnsupportedVariantError otherwise.
std::vector<Rational> diagonal_coefficients(const KernelSpec& spec, int order);

/// Formal reciprocal 1/k = sum c_n x^n through order M.
struct ReciprocalSeries {
  std::vector<Rational> coeffs;
  int order = 0;
  /// Indices n with c_n > 0, resp. c_n < 0. Zero coefficients are in neither.
  std::vector<int> positive_part;
  std::vector<int> negative_part;
};

/// c_0 = 1/a_0, c_m = -(1/a_0) sum_{j=1..m} a_j c_{m-j}, exactly.
ReciprocalSeries reciprocal_series(const KernelSpec& spec, int order);

// ---------------------------------------------------------------------------

template <class Scalar>
HermitianMatrix<Scalar>::HermitianMatrix(Matrix m, double tol) : entries_(std::move(m)) {
  if (entries_.rows() != entries_.cols()) throw ValidationError("matrix is not square");
  const Eigen::Index n = entries_.rows();
  if constexpr (is_exact_v<Scalar>) {
    (void)tol;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j)
        if (entries_(i, j) != detail::conjugate(entries_(j, i)))
          throw ValidationError("matrix is not Hermitian");
  } else {
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (!(asym <= tol * scale))
      throw ValidationError("matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");
    Matrix sym = (entries_ + entries_.adjoint()) / 2.0;
    entries_ = std::move(sym);
  }
}

}  // namespace rkhs
