#pragma once

// Arbitrary precision integers and rationals (GMP backed).

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "klein11/errors.hpp"

namespace klein11 {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

inline Rational inverse(const Rational& q) {
  if (is_zero(q)) throw DivisionByZero();
  return Rational(1) / q;
}

// Canonical "p/q" text; the denominator is always printed.
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

// Accepts "p/q" or "p"; the result is canonicalized.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!detail::is_decimal_integer(num) || !detail::is_decimal_integer(den) ||
      den.front() == '-')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return q;
}

// Exact n-th root when it exists in Z.
inline std::optional<Integer> exact_root(const Integer& z, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (sgn(z) < 0 && n % 2 == 0) return std::nullopt;
  Integer r;
  const int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return r;
}

inline std::optional<Rational> exact_root(const Rational& q, unsigned long n) {
  auto num = exact_root(Integer(q.get_num()), n);
  auto den = exact_root(Integer(q.get_den()), n);
  if (!num || !den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

}  // namespace klein11
