// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rkhs/kernel.hpp"

namespace rkhs {

/// Default PSD threshold on the minimal eigenvalue, before scaling by the
/// largest entry of the tested matrix.
inline constexpr double kDefaultPsdTolerance = 1e-10;

/// Outcome of an eigenvalue-based positivity test.
struct PsdVerdict {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  /// Unit eigenvector for `min_eigenvalue`.
  Eigen::VectorXcd witness;
  /// Effective threshold: is_psd <=> min_eigenvalue >= -tolerance.
  double tolerance = 0.0;
};

/// Smallest eigenvalue of `m` with its eigenvector. The requested tolerance
/// is multiplied by max(1, max_ij |m_ij|).
PsdVerdict psd_check(const HermitianMatrixd& m, double tol = kDefaultPsdTolerance);

/// Validates `m` as Hermitian first; throws ValidationError otherwise.
PsdVerdict psd_check(const Eigen::MatrixXcd& m, double tol = kDefaultPsdTolerance);

struct NpReport {
  std::string kernel;
  Pointd base_point;
  std::vector<Pointd> points;
  /// Absent whenever the kernel vanished at some pair.
  std::optional<PsdVerdict> verdict;
  /// [k(y,x) k(b,b) - k(y,b) k(b,x)] / k(y,x); entries at vanishing pairs are 0.
  Eigen::MatrixXcd schur_matrix;
  std::vector<std::pair<int, int>> kernel_zero_pairs;
  /// A PSD outcome on finitely many points is evidence, not proof.
  bool evidence_only = false;
  std::optional<std::uint64_t> seed;
};

/// Positivity test of the kernel L_b(y, x) = k(b,b) - k(y,b) k(b,x) / k(y,x)
/// on `pts`. A non-PSD verdict certifies that `spec` is not a complete Pick
/// kernel.
NpReport np_test(const KernelSpec& spec, const PointSetd& pts, const Pointd& base,
                 double tol = kDefaultPsdTolerance);

struct OracleVerdict {
  bool np_at_order = true;
  /// First n in 1..M with c_n > 0.
  std::optional<int> first_failing_index;
  ReciprocalSeries series;
};

/// A kernel sum a_n <z,w>^n with a_0 > 0 is complete Pick iff every
/// coefficient c_n, n >= 1, of 1/k is <= 0. Checks n = 1..order.
OracleVerdict diagonal_np_oracle(const KernelSpec& spec, int order);

/// Uniform random point in the kernel's domain, shrunk by `fraction` so the
/// Gram matrices stay well conditioned. Fock points use radius 2.
Pointd random_point(const KernelSpec& spec, std::mt19937_64& rng, double fraction = 0.95);

/// `size` distinct random points.
PointSetd random_point_set(const KernelSpec& spec, std::size_t size, std::mt19937_64& rng,
                           double fraction = 0.95);

struct WitnessSearch {
  std::uint64_t seed = 0;
  int trials = 200;
  int max_points = 8;
  double fraction = 0.95;
  double tol = kDefaultPsdTolerance;
};

/// Randomized search for a point set (sizes 2..max_points) on which np_test
/// fails at `base`. Returns the first failing report, with its seed recorded.
std::optional<NpReport> search_np_witness(const KernelSpec& spec, const Pointd& base,
                                          const WitnessSearch& options);

}  // namespace rkhs
