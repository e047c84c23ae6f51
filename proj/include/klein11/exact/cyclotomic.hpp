#pragma once

// Exact arithmetic in Q(zeta_11).
//
// An element is c0 + c1*rho + ... + c9*rho^9 with rho = exp(2*pi*i/11).  The
// power basis rho^0..rho^9 together with rho^10 = -(1 + rho + ... + rho^9)
// gives every element exactly one representation.  Internally the ten
// coefficients share one positive denominator and the representation is kept
// in lowest terms, so equality is coefficientwise.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "klein11/errors.hpp"
#include "klein11/exact/rational.hpp"

namespace klein11 {

class Cyclotomic {
 public:
  static constexpr int kPrime = 11;
  static constexpr int kDegree = 10;

  Cyclotomic() = default;
  Cyclotomic(long value) { num_[0] = value; }  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& value) { num_[0] = value; }  // NOLINT
  Cyclotomic(const Rational& value) {                    // NOLINT
    num_[0] = value.get_num();
    den_ = value.get_den();
  }

  // rho^k for any integer k.
  static Cyclotomic rho_power(long k) {
    Cyclotomic r;
    const int e = static_cast<int>(((k % kPrime) + kPrime) % kPrime);
    if (e < kDegree) {
      r.num_[e] = 1;
    } else {
      for (auto& c : r.num_) c = -1;
    }
    return r;
  }

  static Cyclotomic from_coefficients(const std::array<Rational, kDegree>& coeffs) {
    Cyclotomic r;
    Integer den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (int i = 0; i < kDegree; ++i) r.num_[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    r.den_ = den;
    r.normalize();
    return r;
  }

  Rational coefficient(int i) const {
    Rational q(num_.at(i), den_);
    q.canonicalize();
    return q;
  }

  std::array<Rational, kDegree> coefficients() const {
    std::array<Rational, kDegree> out;
    for (int i = 0; i < kDegree; ++i) out[i] = coefficient(i);
    return out;
  }

  const Integer& denominator() const { return den_; }

  bool is_zero() const {
    for (const auto& c : num_)
      if (sgn(c) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (int i = 1; i < kDegree; ++i)
      if (sgn(num_[i]) != 0) return false;
    return true;
  }

  // Only meaningful when is_rational().
  Rational rational_part() const { return coefficient(0); }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return accumulate(o, 1); }
  Cyclotomic& operator-=(const Cyclotomic& o) { return accumulate(o, -1); }

  Cyclotomic& operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
  }

  Cyclotomic& operator/=(const Cyclotomic& o) {
    *this = *this * o.inverse();
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic r;
    int na = 0, nb = 0;
    std::array<int, kDegree> ia{}, ib{};
    for (int i = 0; i < kDegree; ++i) {
      if (sgn(a.num_[i]) != 0) ia[na++] = i;
      if (sgn(b.num_[i]) != 0) ib[nb++] = i;
    }
    if (na == 0 || nb == 0) return r;
    mpz_mul(r.den_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
    if (na == 1 && ia[0] == 0) {
      for (int j = 0; j < nb; ++j)
        mpz_mul(r.num_[ib[j]].get_mpz_t(), b.num_[ib[j]].get_mpz_t(), a.num_[0].get_mpz_t());
      r.normalize();
      return r;
    }
    if (nb == 1 && ib[0] == 0) {
      for (int i = 0; i < na; ++i)
        mpz_mul(r.num_[ia[i]].get_mpz_t(), a.num_[ia[i]].get_mpz_t(), b.num_[0].get_mpz_t());
      r.normalize();
      return r;
    }
    thread_local std::array<Integer, 2 * kDegree - 1> acc;
    for (auto& c : acc) mpz_set_ui(c.get_mpz_t(), 0);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        mpz_addmul(acc[ia[i] + ib[j]].get_mpz_t(), a.num_[ia[i]].get_mpz_t(),
                   b.num_[ib[j]].get_mpz_t());
    // rho^11 = 1
    for (int k = kPrime; k < 2 * kDegree - 1; ++k) acc[k - kPrime] += acc[k];
    // rho^10 = -(1 + rho + ... + rho^9)
    for (int i = 0; i < kDegree; ++i) mpz_sub(r.num_[i].get_mpz_t(), acc[i].get_mpz_t(), acc[kDegree].get_mpz_t());
    r.normalize();
    return r;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  // Galois automorphism rho -> rho^k.
  Cyclotomic conj(long k) const {
    const int kk = static_cast<int>(((k % kPrime) + kPrime) % kPrime);
    if (kk == 0) throw MathError("galois_conj: exponent must be coprime to 11");
    std::array<Integer, kPrime> acc;
    for (int i = 0; i < kDegree; ++i) acc[(i * kk) % kPrime] = num_[i];
    Cyclotomic r;
    r.den_ = den_;
    for (int i = 0; i < kDegree; ++i) r.num_[i] = acc[i] - acc[kDegree];
    return r;  // already in lowest terms: conjugation permutes the content
  }

  // Product of the ten conjugates.
  Rational norm() const {
    if (is_zero()) return Rational(0);
    Cyclotomic p = *this;
    for (int k = 2; k < kPrime; ++k) p = p * conj(k);
    return p.rational_part();
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_11)");
    if (is_rational()) return Cyclotomic(make_rational(den_, num_[0]));
    Cyclotomic others = conj(2);
    for (int k = 3; k < kPrime; ++k) others = others * conj(k);
    const Cyclotomic n = *this * others;
    return others * Cyclotomic(make_rational(n.den_, n.num_[0]));
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  std::size_t hash() const {
    std::size_t h = mpz_get_ui(den_.get_mpz_t());
    for (const auto& c : num_)
      h = h * 1000003u ^ (mpz_get_ui(c.get_mpz_t()) + (sgn(c) < 0 ? 7919u : 0u));
    return h;
  }

  // Bracketed 10-vector "[p/q,...]".
  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < kDegree; ++i) {
      if (i) s += ',';
      s += klein11::to_string(coefficient(i));
    }
    return s + "]";
  }

  static Cyclotomic parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
      throw ParseError("cyclotomic literal must be bracketed: '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    std::array<Rational, kDegree> c;
    for (int i = 0; i < kDegree; ++i) {
      const auto comma = text.find(',');
      if ((i < kDegree - 1) == (comma == std::string_view::npos))
        throw ParseError("cyclotomic literal needs exactly 10 entries");
      c[i] = parse_rational(text.substr(0, comma));
      if (comma != std::string_view::npos) text.remove_prefix(comma + 1);
    }
    return from_coefficients(c);
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

 private:
  Cyclotomic& accumulate(const Cyclotomic& o, int sign) {
    if (den_ == o.den_) {
      for (int i = 0; i < kDegree; ++i) {
        if (sign > 0)
          num_[i] += o.num_[i];
        else
          num_[i] -= o.num_[i];
      }
    } else {
      for (int i = 0; i < kDegree; ++i) {
        num_[i] *= o.den_;
        if (sign > 0)
          mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
        else
          mpz_submul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
      }
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }

  void normalize() {
    if (den_ == 1) return;
    if (sgn(den_) < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    Integer g = den_;
    for (const auto& c : num_) {
      if (sgn(c) == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  std::array<Integer, kDegree> num_{};
  Integer den_{1};
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline Cyclotomic inverse(const Cyclotomic& c) { return c.inverse(); }

inline Cyclotomic galois_conj(const Cyclotomic& a, long k) { return a.conj(k); }

// Quadratic character of (Z/11)^*: +1 on the residues {1, 3, 4, 5, 9}.
constexpr int legendre11(long k) {
  const long r = ((k % 11) + 11) % 11;
  if (r == 0) return 0;
  return (r == 1 || r == 3 || r == 4 || r == 5 || r == 9) ? 1 : -1;
}

// The Gauss sum sum_k chi(k) rho^k; its square is -11 and its imaginary part
// is +sqrt(11).
inline Cyclotomic sqrt_m11() {
  Cyclotomic g;
  for (int k = 1; k < 11; ++k) g += Cyclotomic(legendre11(k)) * Cyclotomic::rho_power(k);
  return g;
}

// a + b*sqrt(-11) with rational a, b, when the element lies in Q(sqrt(-11)).
struct QuadraticForm {
  Rational a;
  Rational b;
};

inline std::optional<QuadraticForm> as_quadratic(const Cyclotomic& x) {
  // sqrt(-11) = 1 + 2*(rho + rho^3 + rho^4 + rho^5 + rho^9) on the power basis.
  const Rational b = x.coefficient(1) / 2;
  const Rational a = x.coefficient(0) - b;
  if (Cyclotomic(a) + Cyclotomic(b) * sqrt_m11() != x) return std::nullopt;
  return QuadraticForm{a, b};
}

// Human readable form: "a + b*sqrt(-11)" when quadratic, else the 10-vector.
inline std::string pretty(const Cyclotomic& x) {
  const auto q = as_quadratic(x);
  if (!q) return x.to_string();
  auto r = [](const Rational& v) {
    return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
  };
  if (is_zero(q->b)) return r(q->a);
  std::string s;
  if (!is_zero(q->a)) s = r(q->a) + (sgn(q->b) > 0 ? " + " : " - ");
  else if (sgn(q->b) < 0) s = "-";
  const Rational mag = abs(q->b);
  if (mag != 1) s += r(mag) + "*";
  return s + "sqrt(-11)";
}

inline std::complex<double> to_complex(const Cyclotomic& x) {
  std::complex<double> z = 0;
  for (int i = 0; i < Cyclotomic::kDegree; ++i) {
    const double c = x.coefficient(i).get_d();
    if (c == 0) continue;
    z += c * std::polar(1.0, 2.0 * std::numbers::pi * i / 11.0);
  }
  return z;
}

}  // namespace klein11

template <>
struct std::hash<klein11::Cyclotomic> {
  std::size_t operator()(const klein11::Cyclotomic& c) const noexcept { return c.hash(); }
};
