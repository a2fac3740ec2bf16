// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#include "rkhs/rational.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "rkhs/errors.hpp"

namespace rkhs {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& r) {
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Base-10 conversion; mpz's string constructor reads a leading 0 as octal.
mp::mpz_int decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return mp::mpz_int{std::string(digits)};
}

mp::mpz_int parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  mp::mpz_int v = decimal_integer(s);
  return negative ? mp::mpz_int(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_integer(text.substr(0, slash), whole);
    const auto den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  // Decimal: [sign] digits [. digits] [e|E [sign] digits]
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const auto exp_part = text.substr(e + 1);
    const auto exp_value = parse_integer(exp_part, whole);
    if (mp::abs(exp_value) > 4096) throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    exponent = exp_value.convert_to<long>();
    text = text.substr(0, e);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw ParseError("not a rational number: '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
    digits = std::string(text);
  }
  Rational value{decimal_integer(digits)};
  const mp::mpz_int scale = mp::pow(mp::mpz_int(10), static_cast<unsigned>(std::labs(exponent)));
  value = exponent >= 0 ? value * Rational(scale) : value / Rational(scale);
  return negative ? Rational(-value) : value;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite value has no rational form");
  return Rational(x);
}

Rational rational_from_decimal_double(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite value has no rational form");
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw ParseError("cannot format double");
  return parse_rational(std::string_view(buf.data(), static_cast<std::size_t>(end - buf.data())));
}

std::ostream& operator<<(std::ostream& os, const Complexq& z) {
  return os << "(" << to_string(z.re) << "," << to_string(z.im) << ")";
}

}  // namespace rkhs
