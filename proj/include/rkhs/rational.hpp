// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace rkhs {

using cdouble = std::complex<double>;

/// Exact rational scalar. Expression templates are disabled so values can be
/// stored in Eigen containers and bound to `auto` safely.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Serializes as "p/q" with q > 0, including q = 1 for integers.
std::string to_string(const Rational& r);

/// Accepts "p/q", integers and plain decimals ("-0.25", "1e-3").
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Exact binary value of a finite double.
Rational rational_from_double(double x);

/// Rational value of the shortest decimal string that round-trips `x`,
/// so 0.1 maps to 1/10 rather than to its binary expansion.
Rational rational_from_decimal_double(double x);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Gaussian rational a + b i, used for exact kernel evaluation at rational
/// points.
struct Complexq {
  Rational re{0};
  Rational im{0};

  Complexq() = default;
  Complexq(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Complexq(int real) : re(real) {}                  // NOLINT(google-explicit-constructor)
  Complexq(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  friend Complexq operator+(const Complexq& a, const Complexq& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complexq operator-(const Complexq& a, const Complexq& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complexq operator-(const Complexq& a) { return {-a.re, -a.im}; }
  friend Complexq operator*(const Complexq& a, const Complexq& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complexq operator/(const Complexq& a, const Complexq& b) {
    const Rational d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complexq& operator+=(const Complexq& b) { return *this = *this + b; }
  Complexq& operator-=(const Complexq& b) { return *this = *this - b; }
  Complexq& operator*=(const Complexq& b) { return *this = *this * b; }
  Complexq& operator/=(const Complexq& b) { return *this = *this / b; }
  friend bool operator==(const Complexq& a, const Complexq& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Complexq& a, const Complexq& b) { return !(a == b); }
};

inline Complexq conj(const Complexq& z) { return {z.re, -z.im}; }
/// Squared modulus.
inline Rational norm(const Complexq& z) { return z.re * z.re + z.im * z.im; }
inline Rational real(const Complexq& z) { return z.re; }
inline std::complex<double> to_complex(const Complexq& z) { return {to_double(z.re), to_double(z.im)}; }
inline std::complex<double> to_complex(const Rational& r) { return {to_double(r), 0.0}; }
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }

std::ostream& operator<<(std::ostream& os, const Complexq& z);

/// Conversion of an exact rational into the scalar field used for evaluation.
template <class Scalar>
Scalar from_rational(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, Complexq>) {
    return Complexq(r);
  } else {
    return Scalar(to_double(r));
  }
}

/// True for scalar types whose arithmetic is exact.
template <class Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Complexq> || std::is_same_v<Scalar, Rational>;

}  // namespace rkhs

namespace Eigen {

template <>
struct NumTraits<rkhs::Complexq> : GenericNumTraits<rkhs::Complexq> {
  using Real = rkhs::Complexq;
  using NonInteger = rkhs::Complexq;
  using Nested = rkhs::Complexq;
  using Literal = rkhs::Complexq;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32
  };
  static inline rkhs::Complexq epsilon() { return {}; }
  static inline rkhs::Complexq dummy_precision() { return {}; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
