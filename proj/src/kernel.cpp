// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#include "rkhs/kernel.hpp"

#include <array>
#include <utility>

namespace rkhs {

namespace {

constexpr std::array<std::pair<Builtin, std::string_view>, 6> kBuiltinNames{{
    {Builtin::szego_disk, "szego_disk"},
    {Builtin::bergman_disk, "bergman_disk"},
    {Builtin::hardy_bidisk, "hardy_bidisk"},
    {Builtin::hardy_ball2, "hardy_ball2"},
    {Builtin::fock_plane, "fock_plane"},
    {Builtin::example51, "example51"},
}};

int builtin_dimension(Builtin b) {
  return (b == Builtin::hardy_bidisk || b == Builtin::hardy_ball2) ? 2 : 1;
}

}  // namespace

std::string_view builtin_name(Builtin b) {
  for (const auto& [value, name] : kBuiltinNames)
    if (value == b) return name;
  return "unknown";
}

std::optional<Builtin> parse_builtin(std::string_view name) {
  for (const auto& [value, n] : kBuiltinNames)
    if (n == name) return value;
  if (name == "szego") return Builtin::szego_disk;
  if (name == "bergman") return Builtin::bergman_disk;
  if (name == "fock") return Builtin::fock_plane;
  return std::nullopt;
}

KernelSpec KernelSpec::builtin(Builtin b) { return KernelSpec(b, builtin_dimension(b)); }

KernelSpec KernelSpec::diagonal(std::vector<Rational> coeffs, double domain_radius, int dimension) {
  if (coeffs.empty()) throw ValidationError("diagonal kernel needs at least a_0");
  if (coeffs[0] <= 0) throw ValidationError("diagonal kernel needs a_0 > 0");
  for (std::size_t n = 1; n < coeffs.size(); ++n)
    if (coeffs[n] < 0) throw ValidationError("diagonal kernel coefficient a_" + std::to_string(n) + " is negative");
  if (!(domain_radius > 0) || !std::isfinite(domain_radius))
    throw ValidationError("diagonal kernel needs a positive finite domain radius");
  if (dimension < 1) throw ValidationError("kernel dimension must be positive");
  return KernelSpec(Diagonal{std::move(coeffs), domain_radius, dimension}, dimension);
}

KernelSpec KernelSpec::product(KernelSpec left, KernelSpec right) {
  const int d = left.dimension() + right.dimension();
  return KernelSpec(Product{std::make_shared<const KernelSpec>(std::move(left)),
                            std::make_shared<const KernelSpec>(std::move(right))},
                    d);
}

KernelSpec::Kind KernelSpec::kind() const {
  switch (data_.index()) {
    case 0:
      return Kind::builtin;
    case 1:
      return Kind::diagonal;
    default:
      return Kind::product;
  }
}

std::string KernelSpec::name() const {
  switch (kind()) {
    case Kind::builtin:
      return std::string(builtin_name(as_builtin()));
    case Kind::diagonal:
      return "diagonal(order " + std::to_string(as_diagonal().coeffs.size() - 1) + ")";
    case Kind::product:
      return "product(" + as_product().left->name() + ", " + as_product().right->name() + ")";
  }
  return "unknown";
}

std::vector<Rational> diagonal_coefficients(const KernelSpec& spec, int order) {
  if (order < 0) throw ValidationError("series order must be non-negative");
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1, Rational(0));
  switch (spec.kind()) {
    case KernelSpec::Kind::diagonal: {
      const auto& c = spec.as_diagonal().coeffs;
      for (std::size_t n = 0; n < a.size() && n < c.size(); ++n) a[n] = c[n];
      return a;
    }
    case KernelSpec::Kind::product:
      throw UnsupportedVariantError("product kernels have no single-variable power series");
    case KernelSpec::Kind::builtin:
      break;
  }
  switch (spec.as_builtin()) {
    case Builtin::szego_disk:
      for (auto& v : a) v = 1;
      break;
    case Builtin::bergman_disk:
    case Builtin::hardy_ball2:
      for (std::size_t n = 0; n < a.size(); ++n) a[n] = Rational(static_cast<long>(n) + 1);
      break;
    case Builtin::example51:
      a[0] = 1;
      for (std::size_t n = 1; n < a.size(); ++n) a[n] = 2;
      break;
    case Builtin::fock_plane: {
      Rational term(1);
      for (std::size_t n = 0; n < a.size(); ++n) {
        if (n > 0) term /= Rational(static_cast<long>(n));
        a[n] = term;
      }
      break;
    }
    case Builtin::hardy_bidisk:
      throw UnsupportedVariantError("hardy_bidisk is not a function of <z, w>");
  }
  return a;
}

ReciprocalSeries reciprocal_series(const KernelSpec& spec, int order) {
  const auto a = diagonal_coefficients(spec, order);
  if (a[0] <= 0) throw ValidationError("reciprocal series needs a_0 > 0");
  ReciprocalSeries s;
  s.order = order;
  s.coeffs.assign(a.size(), Rational(0));
  const Rational inv_a0 = 1 / a[0];
  s.coeffs[0] = inv_a0;
  for (std::size_t m = 1; m < a.size(); ++m) {
    Rational acc(0);
    for (std::size_t j = 1; j <= m; ++j) acc += a[j] * s.coeffs[m - j];
    s.coeffs[m] = -inv_a0 * acc;
  }
  for (int n = 0; n <= order; ++n) {
    const auto& c = s.coeffs[static_cast<std::size_t>(n)];
    if (c > 0) s.positive_part.push_back(n);
    if (c < 0) s.negative_part.push_back(n);
  }
  return s;
}

}  // namespace rkhs
