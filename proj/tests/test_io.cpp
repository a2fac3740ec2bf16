// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rkhs/io.hpp"

using namespace rkhs;
using io::json;

namespace {

PointSetd csv(const std::string& text) {
  std::istringstream in(text);
  return io::read_points_csv(in);
}

std::string parse_error_message(const std::string& text) {
  try {
    csv(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-1.5e-2") == Rational(-3, 200));
  CHECK(parse_rational("2E3") == 2000);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(to_string(Rational(-2, 6)) == "-1/3");
  CHECK(rational_from_double(0.1) != Rational(1, 10));
  CHECK(rational_from_decimal_double(0.1) == Rational(1, 10));
  CHECK(rational_from_double(0.375) == Rational(3, 8));
}

TEST_CASE("points CSV with header, comments and labels") {
  const auto pts = csv("# sample\nre,im,label\n0.5,0,a\n-0.25,0.1,b\n\n");
  REQUIRE(pts.size() == 2);
  CHECK(pts.dimension() == 1);
  CHECK(pts[1](0) == cdouble(-0.25, 0.1));
  CHECK(pts.labels() == std::vector<std::string>{"a", "b"});

  const auto two = csv("0.1,0,0.2,0\n0.3,0.1,0,0\n");
  CHECK(two.dimension() == 2);
  CHECK(two.labels().empty());
}

TEST_CASE("points CSV errors carry line numbers") {
  CHECK(parse_error_message("0.1,0\n0.2\n").find("line 2") != std::string::npos);
  CHECK(parse_error_message("0.1,0\n0.2,x\n").find("line 2") != std::string::npos);
  CHECK(parse_error_message("0.1,0\n0.2,0,0.3,0\n").find("line 2") != std::string::npos);
  CHECK_FALSE(parse_error_message("# nothing\n").empty());
  CHECK_THROWS_AS(csv("0.1,0\n0.1,0\n"), ValidationError);
  CHECK_THROWS_AS(io::read_points_csv_file("/nonexistent/points.csv"), ParseError);
}

TEST_CASE("single point parsing") {
  const auto p = io::parse_point("0.5,-0.25,0,1");
  REQUIRE(p.size() == 2);
  CHECK(p(0) == cdouble(0.5, -0.25));
  CHECK(p(1) == cdouble(0, 1));
  CHECK_THROWS_AS(io::parse_point("0.5"), ParseError);
  CHECK_THROWS_AS(io::parse_point("0.5,q"), ParseError);
}

TEST_CASE("kernel specs round-trip through JSON") {
  const std::vector<KernelSpec> specs{
      KernelSpec::builtin(Builtin::example51),
      KernelSpec::diagonal({Rational(1), Rational(1, 3)}, 0.5, 2),
      KernelSpec::product(KernelSpec::builtin(Builtin::szego_disk), KernelSpec::builtin(Builtin::hardy_ball2))};
  for (const auto& s : specs) {
    const auto back = io::kernel_from_json(io::kernel_to_json(s));
    CHECK(back.name() == s.name());
    CHECK(back.dimension() == s.dimension());
    CHECK(io::kernel_to_json(back) == io::kernel_to_json(s));
  }
  CHECK(io::kernel_from_argument("szego").dimension() == 1);
  CHECK(io::kernel_from_argument(R"({"variant": "diagonal", "coeffs": ["1", "1/2", 0.25]})").dimension() == 1);
}

TEST_CASE("kernel spec errors") {
  CHECK_THROWS_AS(io::kernel_from_argument("nope"), ParseError);
  CHECK_THROWS_AS(io::kernel_from_argument("{bad json"), ParseError);
  CHECK_THROWS_AS(io::kernel_from_json(json{{"variant", "hardy_bidisk"}, {"dimension", 1}}), ValidationError);
  CHECK_THROWS_AS(io::kernel_from_json(json{{"variant", "diagonal"}}), ParseError);
  CHECK_THROWS_AS(io::kernel_from_json(json{{"variant", "diagonal"}, {"coeffs", json::array({0, 1})}}), ValidationError);
  CHECK_THROWS_AS(io::kernel_from_json(json{{"variant", "diagonal"}, {"coeffs", json::array({1, -1})}}), ValidationError);
}

TEST_CASE("matrices round-trip through JSON") {
  Eigen::MatrixXcd m(2, 3);
  m << cdouble(1, 2), 0.5, cdouble(0, -1), 3.0, cdouble(-0.25, 0.125), 0.0;
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[[1,0]],[[1,0],[2,0]]]")), ShapeError);
  CHECK_THROWS_AS(io::matrix_from_json(json::array()), ParseError);
}

TEST_CASE("polynomial matrices from JSON") {
  const auto j = json::parse(R"({"variables": 2, "entries": [[
      [{"exp": [0, 0], "coef": 1}],
      [{"exp": [1, 1], "coef": "1/2"}, {"exp": [0, 1], "coef": [0, 1]}]
    ]]})");
  const auto m = io::polynomial_matrix_from_json(j);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 2);
  Eigen::VectorXcd z(2);
  z << 0.5, cdouble(0, 1);
  CHECK(std::abs(m(0, 1)(z) - (0.5 * 0.5 * cdouble(0, 1) + cdouble(0, 1) * cdouble(0, 1))) < 1e-15);
  CHECK_THROWS_AS(io::polynomial_matrix_from_json(json::parse(R"({"variables": 2, "entries": [[[{"exp": [1], "coef": 1}]]]})")),
                  ShapeError);
  CHECK_THROWS_AS(io::polynomial_matrix_from_json(json::parse(R"({"entries": []})")), ParseError);
}

TEST_CASE("report serialisation") {
  const auto r = np_test(KernelSpec::builtin(Builtin::szego_disk), PointSetd({Pointd::Constant(1, 0.3), Pointd::Constant(1, -0.5)}),
                         Pointd::Zero(1));
  const auto j = io::to_json(r);
  CHECK(j["is_psd"] == true);
  CHECK(j["evidence_only"] == true);
  CHECK(j["schur_matrix"].size() == 2);

  const auto g = io::growth_csv({GrowthRow{1, std::sqrt(2.0), std::sqrt(2.0), true}});
  CHECK(g.rfind("N,lower_bound,achieved_norm,optimal\n1,1.4142135623730951,1.4142135623730951,true\n", 0) == 0);

  const auto cert = io::to_json(norm_lower_bound(3));
  CHECK(cert["l2_lower_bound"] == "4/1");
  CHECK(cert["achieving_solution"].is_null());

  const auto idr = io::to_json(verify_bergman_identity(1, 4));
  CHECK(idr["lemma_id"] == "4.1");
  CHECK(idr["exact_zero"] == true);
}

TEST_CASE("leading zeros are decimal") {
  CHECK(parse_rational("010/3") == Rational(10, 3));
  CHECK(parse_rational("0.0625") == Rational(1, 16));
  CHECK(parse_rational("007") == 7);
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("1e-03") == Rational(1, 1000));
}
