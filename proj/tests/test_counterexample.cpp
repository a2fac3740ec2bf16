// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rkhs/counterexample.hpp"
#include "rkhs/douglas.hpp"

using namespace rkhs;

namespace {

using Poly = Polynomial<Rational>;

Poly mono(int a, int b, Rational c = Rational(1)) { return Poly::monomial({a, b}, c); }

/// Adds h times the syzygy (-z^N w, 1) of A's first two columns to column j.
PolynomialMatrixq perturb(int n, PolynomialMatrixq c, const Poly& h, Eigen::Index j) {
  c.set(0, j, c(0, j) - mono(n, 1) * h);
  c.set(1, j, c(1, j) + h);
  return c;
}

double sqrt_n1(int n) { return std::sqrt(static_cast<double>(n + 1)); }

}  // namespace

TEST_CASE("counterexample instances") {
  const auto i1 = build_counterexample(1);
  CHECK(i1.a.rows() == 2);
  CHECK(i1.a(0, 0) == mono(0, 0));
  CHECK(i1.a(0, 1) == mono(1, 1));
  CHECK(i1.b(0, 0) == mono(1, 0));
  CHECK(i1.b(0, 1) == mono(0, 1));
  CHECK(i1.a(1, 0).is_zero());

  const auto i2 = build_counterexample(2);
  CHECK(i2.a(0, 1) == mono(2, 1));
  CHECK(i2.a(0, 2) == mono(1, 2));
  CHECK(i2.b(0, 0) == mono(2, 0));
  CHECK(i2.b(0, 1) == mono(1, 1));
  CHECK(i2.b(0, 2) == mono(0, 2));
  CHECK_THROWS_AS(build_counterexample(0), ValidationError);
}

TEST_CASE("canonical solution solves A C = B") {
  for (int n = 1; n <= 6; ++n) {
    const auto inst = build_counterexample(n);
    const auto c = canonical_solution(n);
    CHECK((inst.a * c - inst.b).is_zero());
    const auto forced = forced_coefficient_check(n, c);
    CHECK(forced.size() == static_cast<std::size_t>(n + 1));
    for (bool f : forced) CHECK(f);
  }
}

TEST_CASE("forced coefficients survive null-space perturbations") {
  Poly h = mono(2, 0, Rational(3, 7)) + mono(0, 1, Rational(-5)) + mono(0, 0, Rational(1, 2));
  for (int n = 1; n <= 4; ++n) {
    auto c = canonical_solution(n);
    for (Eigen::Index j = 0; j <= n; ++j) c = perturb(n, c, h, j);
    CHECK_FALSE((c - canonical_solution(n)).is_zero());
    const auto forced = forced_coefficient_check(n, c);
    for (bool f : forced) CHECK(f);
  }
}

TEST_CASE("non-solutions are rejected with a residual") {
  auto c = canonical_solution(2);
  c.set(0, 1, c(0, 1) + mono(0, 0));
  try {
    forced_coefficient_check(2, c);
    FAIL("expected NotASolutionError");
  } catch (const NotASolutionError& e) {
    CHECK(e.residual()(0, 1) == mono(0, 0));
    CHECK(e.residual()(0, 0).is_zero());
  }
  CHECK_THROWS_AS(forced_coefficient_check(2, canonical_solution(1)), ShapeError);
}

TEST_CASE("norm bounds") {
  for (int n = 1; n <= 6; ++n) {
    const auto cert = norm_lower_bound(n);
    CHECK(cert.l2_lower_bound == n + 1);
    CHECK(cert.operator_norm_lower_bound == doctest::Approx(sqrt_n1(n)).epsilon(1e-15));
  }
}

TEST_CASE("torus sup norm of simple matrices") {
  PolynomialMatrixd c(1, 2, 2);
  c.set(0, 0, Polynomial<cdouble>::monomial({1, 0}));
  c.set(0, 1, Polynomial<cdouble>::monomial({0, 1}));
  CHECK(torus_sup_norm(c, 8) == doctest::Approx(std::sqrt(2.0)));
  // |1 + z| peaks at z = 1, which every grid contains.
  PolynomialMatrixd d(1, 1, 2);
  d.set(0, 0, Polynomial<cdouble>::monomial({0, 0}) + Polynomial<cdouble>::monomial({1, 0}));
  CHECK(torus_sup_norm(d, 5) == doctest::Approx(2.0));
  CHECK_THROWS_AS(torus_sup_norm(d, 0), ValidationError);
}

TEST_CASE("every solution has sup norm at least sqrt(N+1)") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> num(-9, 9), deg(0, 3);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 10; ++t) {
      auto c = canonical_solution(n);
      for (Eigen::Index j = 0; j <= n; ++j) {
        Poly h = mono(deg(rng), deg(rng), Rational(num(rng), 10)) + mono(deg(rng), deg(rng), Rational(num(rng), 10));
        c = perturb(n, c, h, j);
      }
      for (bool f : forced_coefficient_check(n, c)) CHECK(f);
      CHECK(torus_sup_norm(c.to_complex(), c.degree() + 2) >= sqrt_n1(n) - 1e-12);
    }
  }
}

TEST_CASE("minimal norm solutions attain sqrt(N+1)") {
  for (int n : {1, 2, 4}) {
    const auto cert = minimal_norm_solve(n, n, 64);
    CHECK(cert.optimal);
    CHECK(cert.achieved_norm == doctest::Approx(sqrt_n1(n)).epsilon(1e-12));
    CHECK(cert.achieved_l2 == n + 1);
    REQUIRE(cert.achieving_solution);
    for (bool f : forced_coefficient_check(n, *cert.achieving_solution)) CHECK(f);
  }
}

TEST_CASE("larger degree bounds do not beat sqrt(N+1)") {
  MinimalNormOptions o;
  o.degree_bound = 4;
  o.grid = 32;
  o.iterations = 60;
  o.seed = 3;
  const auto cert = minimal_norm_solve(2, o);
  REQUIRE(cert.achieving_solution);
  for (bool f : forced_coefficient_check(2, *cert.achieving_solution)) CHECK(f);
  CHECK(cert.achieved_norm >= sqrt_n1(2) - 1e-10);
  CHECK(cert.optimal);
  CHECK(cert.seed == 3u);
  CHECK(cert.degree_bound == 4);

  const auto again = minimal_norm_solve(2, o);
  CHECK(again.achieved_norm == cert.achieved_norm);
}

TEST_CASE("minimal_norm_solve validates its options") {
  CHECK_THROWS_AS(minimal_norm_solve(3, 2, 64), ValidationError);
  CHECK_THROWS_AS(minimal_norm_solve(3, 3, 3), ValidationError);
}

TEST_CASE("growth report grows without bound") {
  const auto rows = growth_report(6, 0, 64);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == static_cast<int>(i) + 1);
    CHECK(rows[i].optimal);
    CHECK(rows[i].lower_bound == doctest::Approx(sqrt_n1(rows[i].n)));
    if (i > 0) CHECK(rows[i].achieved_norm > rows[i - 1].achieved_norm);
  }
}

TEST_CASE("A_N majorizes B_N on sampled bidisk points") {
  const auto spec = KernelSpec::builtin(Builtin::hardy_bidisk);
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    const auto inst = build_counterexample(n);
    const auto pts = random_point_set(spec, 6, rng);
    const auto v = corona_condition_check(inst.a.to_complex(), inst.b.to_complex(), spec, pts);
    CHECK(v.is_psd);
  }
}
