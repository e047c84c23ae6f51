#pragma once

// Minimal complex arithmetic over an arbitrary real type (double or an MPFR
// backed boost number).  std::complex is only specified for the builtin
// floating types, so this is used wherever the working precision is a
// parameter.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "klein11/exact/cyclotomic.hpp"

namespace klein11 {

using BigFloat = boost::multiprecision::mpfr_float;

template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  Real norm() const { return re * re + im * im; }
  Real abs() const {
    using std::sqrt;
    return sqrt(norm());
  }
};

template <class Real>
Real pi_value() {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::numbers::pi_v<Real>;
  } else {
    using std::acos;
    return acos(Real(-1));
  }
}

template <class Real>
Complex<Real> polar_unit(const Real& angle) {
  using std::cos;
  using std::sin;
  return {cos(angle), sin(angle)};
}

template <class Real>
Complex<Real> cexp(const Complex<Real>& z) {
  using std::exp;
  const Real m = exp(z.re);
  const auto u = polar_unit(z.im);
  return {m * u.re, m * u.im};
}

template <class Real>
Complex<Real> pow(const Complex<Real>& z, long e) {
  if (e < 0) return Complex<Real>(Real(1)) / pow(z, -e);
  Complex<Real> r(Real(1)), b = z;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

// Sets the MPFR default precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10);
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// rho^0 .. rho^10 at the precision of Real.
template <class Real>
std::array<Complex<Real>, 11> rho_powers() {
  std::array<Complex<Real>, 11> out;
  const Real two_pi = 2 * pi_value<Real>();
  for (int k = 0; k < 11; ++k) out[k] = polar_unit(Real(two_pi * k / 11));
  return out;
}

template <class Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(q.get_d());
  } else {
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
  }
}

template <class Real>
Complex<Real> evaluate(const Cyclotomic& a, const std::array<Complex<Real>, 11>& rho) {
  Complex<Real> z;
  for (int i = 0; i < Cyclotomic::kDegree; ++i) {
    const Rational c = a.coefficient(i);
    if (is_zero(c)) continue;
    const Real r = to_real<Real>(c);
    z.re += r * rho[i].re;
    z.im += r * rho[i].im;
  }
  return z;
}

// Evaluates a with rho = exp(2 pi i / 11) using `digits` decimal digits.
inline Complex<BigFloat> complex_eval(const Cyclotomic& a, unsigned digits = 50) {
  PrecisionGuard guard(digits);
  return evaluate(a, rho_powers<BigFloat>());
}

}  // namespace klein11
