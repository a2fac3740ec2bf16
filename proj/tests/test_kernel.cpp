// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "rkhs/kernel.hpp"
#include "rkhs/pick.hpp"

using namespace rkhs;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

Pointq pq(std::initializer_list<Complexq> coords) {
  Pointq p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) p(i++) = c;
  return p;
}

Pointd pd(std::initializer_list<cdouble> coords) {
  Pointd p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) p(i++) = c;
  return p;
}

double min_eig(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  return es.eigenvalues()(0);
}

const std::vector<Builtin> kAllBuiltins{Builtin::szego_disk,  Builtin::bergman_disk, Builtin::hardy_bidisk,
                                        Builtin::hardy_ball2, Builtin::fock_plane,   Builtin::example51};

}  // namespace

TEST_CASE("kernel_eval exact values") {
  const auto szego = KernelSpec::builtin(Builtin::szego_disk);
  const auto ex51 = KernelSpec::builtin(Builtin::example51);
  const auto bergman = KernelSpec::builtin(Builtin::bergman_disk);
  const auto half = pq({q(1, 2)});
  const auto zero = pq({0});

  CHECK(kernel_eval(szego, zero, zero) == Complexq(1));
  CHECK(kernel_eval(ex51, half, half) == Complexq(q(5, 3)));
  CHECK(kernel_eval(bergman, half, half) == Complexq(q(16, 9)));
}

TEST_CASE("kernel_eval agrees with the power series") {
  std::mt19937_64 rng(7);
  const auto szego = KernelSpec::builtin(Builtin::szego_disk);
  const auto bergman = KernelSpec::builtin(Builtin::bergman_disk);
  const auto ex51 = KernelSpec::builtin(Builtin::example51);
  const auto fock = KernelSpec::builtin(Builtin::fock_plane);
  for (int t = 0; t < 50; ++t) {
    const auto z = random_point(szego, rng, 0.9), w = random_point(szego, rng, 0.9);
    const cdouble x = z(0) * std::conj(w(0));
    CHECK(std::abs(kernel_eval(szego, z, w) - oracle::power_series([](int) { return 1.0; }, x)) < 1e-9);
    CHECK(std::abs(kernel_eval(bergman, z, w) - oracle::power_series([](int n) { return n + 1.0; }, x)) < 1e-8);
    CHECK(std::abs(kernel_eval(ex51, z, w) -
                   oracle::power_series([](int n) { return n == 0 ? 1.0 : 2.0; }, x)) < 1e-8);
    CHECK(std::abs(kernel_eval(fock, z, w) -
                   oracle::power_series([](int n) { return 1.0 / std::tgamma(n + 1.0); }, x)) < 1e-12);
  }
}

TEST_CASE("kernel_eval is conjugate symmetric") {
  std::mt19937_64 rng(11);
  for (auto b : kAllBuiltins) {
    const auto spec = KernelSpec::builtin(b);
    for (int t = 0; t < 20; ++t) {
      const auto z = random_point(spec, rng), w = random_point(spec, rng);
      CHECK(std::abs(kernel_eval(spec, z, w) - std::conj(kernel_eval(spec, w, z))) <=
            1e-12 * std::abs(kernel_eval(spec, z, w)));
    }
  }
}

TEST_CASE("domain validation") {
  const auto szego = KernelSpec::builtin(Builtin::szego_disk);
  const auto ball = KernelSpec::builtin(Builtin::hardy_ball2);
  const auto bidisk = KernelSpec::builtin(Builtin::hardy_bidisk);
  const auto fock = KernelSpec::builtin(Builtin::fock_plane);
  const auto zero = pd({0.0});

  CHECK_THROWS_AS(kernel_eval(szego, pd({1.0}), zero), DomainError);
  CHECK_THROWS_AS(kernel_eval(szego, pd({1.0 - 1e-13}), zero), DomainError);
  CHECK_NOTHROW(kernel_eval(szego, pd({1.0 - 1e-9}), zero));
  CHECK_THROWS_AS(kernel_eval(szego, pd({0.1, 0.1}), pd({0.1, 0.1})), DomainError);

  // (0.8, 0.7) is in the bidisk but outside the ball.
  const auto p = pd({0.8, 0.7});
  CHECK_NOTHROW(kernel_eval(bidisk, p, p));
  CHECK_THROWS_AS(kernel_eval(ball, p, p), DomainError);

  CHECK_NOTHROW(kernel_eval(fock, pd({cdouble(30.0, -4.0)}), zero));

  const auto diag = KernelSpec::diagonal({q(1), q(1, 2)}, 0.5);
  CHECK_THROWS_AS(kernel_eval(diag, pd({0.6}), zero), ConvergenceError);
  CHECK_NOTHROW(kernel_eval(diag, pd({0.4}), zero));

  CHECK_THROWS_AS(kernel_eval(KernelSpec::builtin(Builtin::fock_plane), pq({1}), pq({1})), UnsupportedVariantError);
  CHECK_THROWS_AS(kernel_eval(szego, pq({1}), pq({0})), DomainError);
}

TEST_CASE("kernel spec validation") {
  CHECK_THROWS_AS(KernelSpec::diagonal({q(0), q(1)}, 1.0), ValidationError);
  CHECK_THROWS_AS(KernelSpec::diagonal({q(1), q(-1, 2)}, 1.0), ValidationError);
  CHECK_THROWS_AS(KernelSpec::diagonal({q(1)}, 0.0), ValidationError);
  CHECK_THROWS_AS(KernelSpec::diagonal({}, 1.0), ValidationError);
  const auto prod = KernelSpec::product(KernelSpec::builtin(Builtin::hardy_ball2),
                                        KernelSpec::builtin(Builtin::szego_disk));
  CHECK(prod.dimension() == 3);
}

TEST_CASE("point set invariants") {
  CHECK_THROWS_AS(PointSetd({}), ValidationError);
  CHECK_THROWS_AS(PointSetd({pd({0.5}), pd({0.5})}), ValidationError);
  CHECK_THROWS_AS(PointSetd({pd({0.5}), pd({0.1, 0.2})}), ValidationError);
  CHECK_THROWS_AS(PointSetd({pd({0.5})}, {"a", "b"}), ValidationError);
}

TEST_CASE("gram exact values") {
  const auto szego = KernelSpec::builtin(Builtin::szego_disk);
  const auto ex51 = KernelSpec::builtin(Builtin::example51);

  const auto g0 = gram(szego, PointSetq({pq({0})}));
  CHECK(g0.size() == 1);
  CHECK(g0(0, 0) == Complexq(1));

  const PointSetq pts({pq({0}), pq({q(1, 2)})});
  const auto g = gram(szego, pts);
  CHECK(g(0, 0) == Complexq(1));
  CHECK(g(0, 1) == Complexq(1));
  CHECK(g(1, 0) == Complexq(1));
  CHECK(g(1, 1) == Complexq(q(4, 3)));

  const auto h = gram(ex51, pts);
  CHECK(h(1, 1) == Complexq(q(5, 3)));
  CHECK(h(0, 1) == Complexq(1));
}

TEST_CASE("gram with complex rational points is exactly Hermitian") {
  const auto bergman = KernelSpec::builtin(Builtin::bergman_disk);
  const PointSetq pts({pq({Complexq(q(1, 3), q(1, 4))}), pq({Complexq(q(-1, 2), q(1, 5))}), pq({0})});
  const auto g = gram(bergman, pts);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) CHECK(g(i, j) == conj(g(j, i)));
  // 1/(1 - x)^2 at x = (1/3 + i/4)(-1/2 - i/5)
  const Complexq x = Complexq(q(1, 3), q(1, 4)) * Complexq(q(-1, 2), q(-1, 5));
  const Complexq d = Complexq(1) - x;
  CHECK(g(0, 1) == Complexq(1) / (d * d));
}

TEST_CASE("gram is conjugate symmetric and PSD for every builtin") {
  std::mt19937_64 rng(2024);
  for (auto b : kAllBuiltins) {
    const auto spec = KernelSpec::builtin(b);
    for (int t = 0; t < 25; ++t) {
      const auto pts = random_point_set(spec, 2 + t % 7, rng, 0.9);
      const auto g = gram(spec, pts);
      CHECK(g.entries() == g.entries().adjoint().eval());
      const double scale = std::max(1.0, g.entries().cwiseAbs().maxCoeff());
      CHECK(min_eig(g.entries()) >= -1e-10 * scale);
    }
  }
}

TEST_CASE("product kernel factors entrywise") {
  std::mt19937_64 rng(5);
  const auto szego = KernelSpec::builtin(Builtin::szego_disk);
  const auto bergman = KernelSpec::builtin(Builtin::bergman_disk);
  const auto prod = KernelSpec::product(szego, szego);
  const auto bidisk = KernelSpec::builtin(Builtin::hardy_bidisk);
  const auto mixed = KernelSpec::product(bergman, szego);
  for (int t = 0; t < 20; ++t) {
    const auto z = random_point(bidisk, rng), w = random_point(bidisk, rng);
    CHECK(std::abs(kernel_eval(prod, z, w) - kernel_eval(bidisk, z, w)) < 1e-12 * std::abs(kernel_eval(bidisk, z, w)));
    const cdouble expected = kernel_eval(bergman, pd({z(0)}), pd({w(0)})) * kernel_eval(szego, pd({z(1)}), pd({w(1)}));
    CHECK(std::abs(kernel_eval(mixed, z, w) - expected) < 1e-12 * std::abs(expected));
  }
  const PointSetq pts({pq({q(1, 2), q(1, 3)}), pq({q(-1, 4), q(0)})});
  const auto g = gram(KernelSpec::product(szego, szego), pts);
  const auto h = gram(bidisk, pts);
  CHECK(g.entries() == h.entries());
}

TEST_CASE("compress_gram examples") {
  const auto szego = KernelSpec::builtin(Builtin::szego_disk);
  const auto c = compress_gram(szego, PointSetq({pq({q(1, 2)})}), pq({0}));
  CHECK(c(0, 0) == Complexq(q(1, 3)));

  const auto bidisk = KernelSpec::builtin(Builtin::hardy_bidisk);
  const auto cb = compress_gram(bidisk, PointSetq({pq({q(1, 2), 0})}), pq({0, 0}));
  CHECK(cb(0, 0) == Complexq(q(1, 3)));

  // Projecting k(., base) off itself leaves nothing.
  for (auto b : {Builtin::szego_disk, Builtin::bergman_disk, Builtin::example51}) {
    const auto spec = KernelSpec::builtin(b);
    const auto base = pq({Complexq(q(1, 3), q(-1, 7))});
    const auto cc = compress_gram(spec, PointSetq({base, pq({q(1, 5)})}), base);
    CHECK(cc(0, 0) == Complexq(0));
    CHECK(cc(0, 1) == Complexq(0));
    CHECK(cc(1, 0) == Complexq(0));
  }
}

TEST_CASE("compress_gram is PSD") {
  std::mt19937_64 rng(99);
  for (auto b : kAllBuiltins) {
    const auto spec = KernelSpec::builtin(b);
    for (int t = 0; t < 15; ++t) {
      const auto pts = random_point_set(spec, 2 + t % 6, rng, 0.9);
      const auto base = random_point(spec, rng, 0.9);
      const auto c = compress_gram(spec, pts, base);
      const double scale = std::max(1.0, c.entries().cwiseAbs().maxCoeff());
      CHECK(min_eig(c.entries()) >= -1e-10 * scale);
    }
  }
}

TEST_CASE("hermitian matrix validation") {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, cdouble(0, 1), cdouble(0, 1), 1.0;
  CHECK_THROWS_AS(HermitianMatrixd{m}, ValidationError);
  CHECK_THROWS_AS(HermitianMatrixd(Eigen::MatrixXcd::Zero(2, 3)), ValidationError);
  m(1, 0) = cdouble(0, -1);
  CHECK_NOTHROW(HermitianMatrixd{m});
}

TEST_CASE("reciprocal_series examples") {
  const auto sz = reciprocal_series(KernelSpec::builtin(Builtin::szego_disk), 4);
  CHECK(sz.coeffs == std::vector<Rational>{q(1), q(-1), q(0), q(0), q(0)});
  CHECK(sz.negative_part == std::vector<int>{1});

  const auto be = reciprocal_series(KernelSpec::builtin(Builtin::bergman_disk), 4);
  CHECK(be.coeffs == std::vector<Rational>{q(1), q(-2), q(1), q(0), q(0)});
  CHECK(be.positive_part == std::vector<int>{0, 2});

  const auto ex = reciprocal_series(KernelSpec::builtin(Builtin::example51), 3);
  CHECK(ex.coeffs == std::vector<Rational>{q(1), q(-2), q(2), q(-2)});

  CHECK_THROWS_AS(reciprocal_series(KernelSpec::builtin(Builtin::hardy_bidisk), 3), UnsupportedVariantError);
  CHECK_THROWS_AS(reciprocal_series(KernelSpec::product(KernelSpec::builtin(Builtin::szego_disk),
                                                        KernelSpec::builtin(Builtin::szego_disk)),
                                    3),
                  UnsupportedVariantError);
}

TEST_CASE("reciprocal_series convolution identity holds exactly") {
  std::vector<KernelSpec> corpus;
  for (auto b : {Builtin::szego_disk, Builtin::bergman_disk, Builtin::hardy_ball2, Builtin::fock_plane,
                 Builtin::example51})
    corpus.push_back(KernelSpec::builtin(b));
  corpus.push_back(KernelSpec::diagonal({q(3), q(1, 7), q(0), q(5, 2)}, 1.0));
  corpus.push_back(KernelSpec::diagonal({q(1, 2), q(1), q(1), q(1)}, 0.8, 2));
  for (const auto& spec : corpus) {
    for (int m = 0; m <= 12; ++m) {
      const auto a = diagonal_coefficients(spec, m);
      const auto s = reciprocal_series(spec, m);
      REQUIRE(s.coeffs.size() == static_cast<std::size_t>(m) + 1);
      for (int n = 0; n <= m; ++n) {
        Rational conv(0);
        for (int j = 0; j <= n; ++j) conv += a[static_cast<std::size_t>(j)] * s.coeffs[static_cast<std::size_t>(n - j)];
        CHECK(conv == (n == 0 ? q(1) : q(0)));
      }
    }
  }
}
