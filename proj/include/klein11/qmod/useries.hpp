#pragma once

// Series in u = q^(1/132), q = exp(i pi omega).  Every fractional power of q
// that occurs is an integral power of u.  Factors of mu and 2 pi / omega_2 are
// stripped; what remains of them is the weight tag.

#include <functional>
#include <string>

#include "klein11/algebra/laurent_series.hpp"

namespace klein11 {

inline constexpr long kUPerQ = 132;

// q^a as a power of u; a must be a multiple of 1/132.
inline long q_to_u(const Rational& a) {
  const Rational e = a * kUPerQ;
  if (e.get_den() != 1) throw MathError("q-exponent " + to_string(a) + " is not on the u-lattice");
  return e.get_num().get_si();
}

template <class T>
struct Weighted {
  LaurentSeries<T> s;
  Rational weight;

  Weighted() = default;
  Weighted(LaurentSeries<T> series, Rational w) : s(std::move(series)), weight(std::move(w)) {}

  static Weighted constant(const T& c, const Rational& w = Rational(0)) {
    return {LaurentSeries<T>::monomial(c, 0), w};
  }

  long order() const { return s.order(); }
  long precision() const { return s.precision(); }

  friend Weighted operator+(const Weighted& a, const Weighted& b) {
    check_same(a, b, "+");
    return {a.s + b.s, a.weight};
  }
  friend Weighted operator-(const Weighted& a, const Weighted& b) {
    check_same(a, b, "-");
    return {a.s - b.s, a.weight};
  }
  Weighted operator-() const { return {-s, weight}; }
  friend Weighted operator*(const Weighted& a, const Weighted& b) { return {a.s * b.s, a.weight + b.weight}; }
  friend Weighted operator/(const Weighted& a, const Weighted& b) { return {a.s / b.s, a.weight - b.weight}; }
  Weighted scaled(const T& c) const { return {s.scaled(c), weight}; }
  Weighted pow(long e) const { return {s.pow(e), weight * e}; }
  Weighted& operator+=(const Weighted& o) { return *this = *this + o; }
  Weighted& operator*=(const Weighted& o) { return *this = *this * o; }

  static void check_same(const Weighted& a, const Weighted& b, const char* op) {
    if (a.weight != b.weight)
      throw WeightMismatch(std::string("weights ") + to_string(a.weight) + " " + op + " " + to_string(b.weight));
  }
};

using USeries = Weighted<Cyclotomic>;
using URSeries = Weighted<Rational>;

inline USeries to_cyclotomic(const URSeries& r) {
  return {r.s.map_coefficients([](const Rational& q) { return Cyclotomic(q); }), r.weight};
}

// u^offset * prod_{l >= 1} (1 - c(l) u^(step l))^power, known below prec.
template <class T>
LaurentSeries<T> euler_product(long step, int power, long offset, long prec,
                               const std::function<T(long)>& c = [](long) { return T(1); }) {
  if (step <= 0) throw MathError("euler_product step must be positive");
  const long rel = prec - offset;
  LaurentSeries<T> s = LaurentSeries<T>::monomial(T(1), 0).truncated(std::max(rel, 0L));
  for (long l = 1; step * l < rel; ++l) {
    LaurentSeries<T> f = LaurentSeries<T>::monomial(T(1), 0) - LaurentSeries<T>::monomial(c(l), step * l);
    for (int k = 0; k < power; ++k) s = s * f;
  }
  return s.shifted(offset);
}

inline Integer divisor_power_sum(long n, unsigned k) {
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    Integer a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(d), k);
    s += a;
    if (d * d != n) {
      mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(n / d), k);
      s += b;
    }
  }
  return s;
}

// First exponent below prec where the two series differ, if any.
template <class T>
std::optional<long> first_difference(const LaurentSeries<T>& a, const LaurentSeries<T>& b) {
  const auto d = a - b;
  if (d.is_known_zero()) return std::nullopt;
  return d.valuation();
}

}  // namespace klein11
