#pragma once

// Dense univariate polynomials over a field.

#include <string>
#include <utility>
#include <vector>

#include "klein11/errors.hpp"
#include "klein11/exact/cyclotomic.hpp"

namespace klein11 {

template <class T>
class UPoly {
 public:
  UPoly() = default;
  UPoly(const T& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(T(c)) {}          // NOLINT(google-explicit-constructor)
  // Coefficients from the constant term upwards.
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly x() { return UPoly(std::vector<T>{T(0), T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coefficient(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : T(0); }
  const std::vector<T>& coefficients() const { return c_; }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  UPoly monic() const {
    if (c_.empty()) return *this;
    const T inv = T(1) / c_.back();
    UPoly r = *this;
    for (auto& x : r.c_) x = x * inv;
    return r;
  }

  UPoly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return UPoly(d);
  }

  template <class V>
  V operator()(const V& v) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + V(*it);
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(r);
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(r);
  }

  UPoly pow(unsigned e) const {
    UPoly r(T(1)), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // (quotient, remainder)
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<T> rem = a.c_, quo;
    const int db = b.degree();
    const T inv = T(1) / b.leading();
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, T(0));
    for (int k = a.degree() - db; k >= 0; --k) {
      const T q = rem[k + db] * inv;
      quo[k] = q;
      if (q == T(0)) continue;
      for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.c_[j];
    }
    rem.resize(std::max(0, db));
    return {UPoly(quo), UPoly(rem)};
  }

  // Monic gcd.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  template <class P>
  std::string to_string(P&& print, const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == T(0)) continue;
      if (!s.empty()) s += " + ";
      const bool one = c_[i] == T(1);
      if (!one || i == 0) s += "(" + print(c_[i]) + ")";
      if (i > 0) s += (one ? "" : "*") + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

}  // namespace klein11
