#pragma once

// Sparse polynomials in the five variables y1, y4, y5, y9, y3 (stored in that
// order).  Terms are kept in graded-descending order, which is also the
// canonical text order.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klein11/errors.hpp"
#include "klein11/exact/cyclotomic.hpp"

namespace klein11 {

inline constexpr int kNumVars = 5;
// Subscripts of the variables in storage order.
inline constexpr std::array<int, kNumVars> kVarSubscripts{1, 4, 5, 9, 3};

inline std::string var_name(int i) { return "y" + std::to_string(kVarSubscripts.at(i)); }

// Storage index of y_k, k a quadratic residue mod 11.
inline int var_index(int subscript) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarSubscripts[i] == subscript) return i;
  throw MathError("no variable y" + std::to_string(subscript));
}

using Exponents = std::array<std::uint8_t, kNumVars>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

struct GradedDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

inline std::uint64_t pack(const Exponents& e) {
  std::uint64_t k = 0;
  for (int i = 0; i < kNumVars; ++i) k |= static_cast<std::uint64_t>(e[i]) << (8 * i);
  return k;
}

inline Exponents unpack(std::uint64_t k) {
  Exponents e;
  for (int i = 0; i < kNumVars; ++i) e[i] = static_cast<std::uint8_t>((k >> (8 * i)) & 0xff);
  return e;
}

inline std::string coeff_text(const Rational& q) { return to_string(q); }
inline std::string coeff_text(const Cyclotomic& c) { return c.to_string(); }

template <class T>
class Poly {
 public:
  using Coeff = T;
  using Terms = std::map<Exponents, T, GradedDescending>;

  Poly() = default;
  Poly(const T& c) {  // NOLINT(google-explicit-constructor)
    if (!klein11::is_zero(c)) terms_.emplace(Exponents{}, c);
  }
  Poly(long c) : Poly(T(c)) {}  // NOLINT(google-explicit-constructor)

  // y at storage index i.
  static Poly var(int i) {
    Exponents e{};
    e.at(i) = 1;
    return monomial(e, T(1));
  }

  static Poly monomial(const Exponents& e, const T& c) {
    Poly p;
    if (!klein11::is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  T coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  // -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  void add_term(const Exponents& e, const T& c) {
    if (klein11::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (klein11::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::unordered_map<std::uint64_t, T> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_) {
      const std::uint64_t ka = pack(ea);
      for (const auto& [eb, cb] : b.terms_) {
        // exponents are bytes, so packed addition is exponent addition
        T prod = ca * cb;
        auto [it, fresh] = acc.try_emplace(ka + pack(eb), prod);
        if (!fresh) it->second += prod;
      }
    }
    Poly r;
    for (auto& [k, c] : acc)
      if (!klein11::is_zero(c)) r.terms_.emplace(unpack(k), std::move(c));
    return r;
  }

  Poly scaled(const T& s) const {
    if (klein11::is_zero(s)) return Poly();
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r(T(1)), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // d/dy_i, i a storage index.
  Poly derivative(int i) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      --f[i];
      r.add_term(f, c * T(static_cast<long>(e[i])));
    }
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Poly<U> r;
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  // Value at a point; V must accept multiplication by T.
  template <class V>
  V evaluate(const std::array<V, kNumVars>& y) const {
    V total(0);
    for (const auto& [e, c] : terms_) {
      V t(c);
      for (int i = 0; i < kNumVars; ++i)
        for (int k = 0; k < e[i]; ++k) t = t * y[i];
      total = total + t;
    }
    return total;
  }

  // Canonical text: graded-descending terms "c*y1^2*y9" joined by " + ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += coeff_text(c);
      for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        s += "*" + var_name(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using SparsePoly = Poly<Cyclotomic>;
using RationalPoly = Poly<Rational>;

template <class T>
Poly<T> yvar(int subscript) {
  return Poly<T>::var(var_index(subscript));
}

// Exponents given by subscript, e.g. mono({{1, 2}, {9, 1}}) = y1^2*y9.
inline Exponents mono(std::initializer_list<std::pair<int, int>> powers) {
  Exponents e{};
  for (auto [sub, k] : powers) e[var_index(sub)] = static_cast<std::uint8_t>(k);
  return e;
}

// Cyclic relabeling y1 -> y4 -> y5 -> y9 -> y3 -> y1 applied `steps` times.
template <class T>
Poly<T> cycle_variables(const Poly<T>& p, int steps = 1) {
  Poly<T> r;
  const int s = ((steps % kNumVars) + kNumVars) % kNumVars;
  for (const auto& [e, c] : p.terms()) {
    Exponents f{};
    for (int i = 0; i < kNumVars; ++i) f[(i + s) % kNumVars] = e[i];
    r.add_term(f, c);
  }
  return r;
}

// Sum of the five cyclic images.
template <class T>
Poly<T> cyclic_orbit_sum(const Poly<T>& p) {
  Poly<T> r;
  for (int s = 0; s < kNumVars; ++s) r += cycle_variables(p, s);
  return r;
}

inline SparsePoly to_cyclotomic(const RationalPoly& p) {
  return p.map_coefficients([](const Rational& q) { return Cyclotomic(q); });
}

// Throws if some coefficient is irrational.
inline RationalPoly to_rational(const SparsePoly& p) {
  return p.map_coefficients([](const Cyclotomic& c) {
    if (!c.is_rational()) throw MathError("polynomial has irrational coefficients");
    return c.rational_part();
  });
}

inline SparsePoly galois_conj(const SparsePoly& p, long k) {
  return p.map_coefficients([k](const Cyclotomic& c) { return c.conj(k); });
}

// If a = s*b for a scalar s, returns s.
template <class T>
std::optional<T> scalar_ratio(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  const auto& [e0, c0] = *b.terms().begin();
  const T s = a.coefficient(e0) / c0;
  if (is_zero(s)) return std::nullopt;
  if (b.scaled(s) == a) return s;
  return std::nullopt;
}

}  // namespace klein11
