// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#include "rkhs/pick.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace rkhs {

PsdVerdict psd_check(const HermitianMatrixd& m, double tol) {
  PsdVerdict v;
  const auto& a = m.entries();
  const double scale = a.size() == 0 ? 1.0 : std::max(1.0, a.cwiseAbs().maxCoeff());
  v.tolerance = tol * scale;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
  if (es.info() != Eigen::Success) throw Error("eigen decomposition did not converge");
  v.min_eigenvalue = es.eigenvalues()(0);
  v.witness = es.eigenvectors().col(0).normalized();
  v.is_psd = v.min_eigenvalue >= -v.tolerance;
  return v;
}

PsdVerdict psd_check(const Eigen::MatrixXcd& m, double tol) { return psd_check(HermitianMatrixd(m), tol); }

NpReport np_test(const KernelSpec& spec, const PointSetd& pts, const Pointd& base, double tol) {
  check_in_domain(spec, pts);
  check_in_domain(spec, base);
  const cdouble kbb = detail::eval_unchecked(spec, base, base);
  if (!(std::abs(kbb) > 0.0) || !(kbb.real() > 0.0)) throw DegenerateBaseError("k(base, base) is not positive");

  NpReport r;
  r.kernel = spec.name();
  r.base_point = base;
  r.points = pts.points();
  const auto n = static_cast<Eigen::Index>(pts.size());
  std::vector<cdouble> kb(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) kb[i] = detail::eval_unchecked(spec, pts[i], base);

  // Upper triangle, mirrored.
  r.schur_matrix = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const cdouble kij = detail::eval_unchecked(spec, pts[i], pts[j]);
      if (kij == 0.0) {
        r.kernel_zero_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        continue;
      }
      cdouble v = (kij * kbb - kb[i] * std::conj(kb[j])) / kij;
      if (i == j) v = v.real();
      r.schur_matrix(i, j) = v;
      r.schur_matrix(j, i) = std::conj(v);
    }
  }
  if (r.kernel_zero_pairs.empty()) {
    r.verdict = psd_check(HermitianMatrixd(r.schur_matrix), tol);
    r.evidence_only = r.verdict->is_psd;
  }
  return r;
}

OracleVerdict diagonal_np_oracle(const KernelSpec& spec, int order) {
  OracleVerdict v;
  v.series = reciprocal_series(spec, order);
  if (!v.series.positive_part.empty()) {
    // c_0 = 1/a_0 > 0 is always positive; failures start at n = 1.
    for (int n : v.series.positive_part) {
      if (n >= 1) {
        v.np_at_order = false;
        v.first_failing_index = n;
        break;
      }
    }
  }
  return v;
}

namespace {

cdouble random_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, t);
}

// Uniform in the complex ball of C^d (real dimension 2d).
Pointd random_in_ball(std::mt19937_64& rng, int d, double radius) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Pointd p(d);
  for (int i = 0; i < d; ++i) p(i) = cdouble(g(rng), g(rng));
  const double r = radius * std::pow(u(rng), 1.0 / (2.0 * d));
  return p * (r / p.norm());
}

}  // namespace

Pointd random_point(const KernelSpec& spec, std::mt19937_64& rng, double fraction) {
  switch (spec.kind()) {
    case KernelSpec::Kind::diagonal:
      return random_in_ball(rng, spec.dimension(), fraction * spec.as_diagonal().domain_radius);
    case KernelSpec::Kind::product: {
      const auto& p = spec.as_product();
      Pointd out(spec.dimension());
      out << random_point(*p.left, rng, fraction), random_point(*p.right, rng, fraction);
      return out;
    }
    case KernelSpec::Kind::builtin:
      break;
  }
  switch (spec.as_builtin()) {
    case Builtin::hardy_ball2:
      return random_in_ball(rng, 2, fraction);
    case Builtin::fock_plane:
      return Pointd::Constant(1, random_in_disk(rng, 2.0 * fraction));
    default: {
      Pointd p(spec.dimension());
      for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = random_in_disk(rng, fraction);
      return p;
    }
  }
}

PointSetd random_point_set(const KernelSpec& spec, std::size_t size, std::mt19937_64& rng, double fraction) {
  std::vector<Pointd> pts;
  pts.reserve(size);
  while (pts.size() < size) {
    Pointd p = random_point(spec, rng, fraction);
    bool fresh = true;
    for (const auto& q : pts) fresh = fresh && (q != p);
    if (fresh) pts.push_back(std::move(p));
  }
  return PointSetd(std::move(pts));
}

std::optional<NpReport> search_np_witness(const KernelSpec& spec, const Pointd& base,
                                          const WitnessSearch& options) {
  std::mt19937_64 rng(options.seed);
  const int sizes = std::max(1, options.max_points - 1);
  for (int t = 0; t < options.trials; ++t) {
    const auto size = static_cast<std::size_t>(2 + t % sizes);
    const auto pts = random_point_set(spec, size, rng, options.fraction);
    auto report = np_test(spec, pts, base, options.tol);
    if (report.verdict && !report.verdict->is_psd) {
      report.seed = options.seed;
      return report;
    }
  }
  return std::nullopt;
}

}  // namespace rkhs
