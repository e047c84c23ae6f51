#pragma once

// Truncated Laurent series  sum_{e < prec} c_e x^e  over a field T.
//
// `prec` is absolute: coefficients at exponents >= prec are unknown.  Every
// operation propagates the weakest precision of its inputs and coefficient()
// refuses to answer at or beyond it.  kExact marks series known exactly
// (finitely many terms).

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein11/errors.hpp"
#include "klein11/exact/cyclotomic.hpp"

namespace klein11 {


template <class T>
class LaurentSeries {
 public:
  static constexpr long kExact = LONG_MAX / 4;

  LaurentSeries() = default;
  explicit LaurentSeries(long prec) : prec_(prec) {}
  LaurentSeries(const T& c, long prec) : prec_(prec) {
    if (0 < prec && !is_zero(c)) terms_.emplace(0, c);
  }

  // c * x^e
  static LaurentSeries monomial(const T& c, long e, long prec = kExact) {
    LaurentSeries s(prec);
    if (e < prec && !is_zero(c)) s.terms_.emplace(e, c);
    return s;
  }

  static LaurentSeries from_terms(const std::map<long, T>& terms, long prec) {
    LaurentSeries s(prec);
    for (const auto& [e, c] : terms) s.set(e, c);
    return s;
  }

  long precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  const std::map<long, T>& terms() const { return terms_; }

  T coefficient(long e) const {
    if (e >= prec_) throw TruncationError("coefficient requested beyond truncation", prec_);
    const auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  void set(long e, const T& c) {
    if (e >= prec_) throw TruncationError("coefficient set beyond truncation", prec_);
    if (is_zero(c))
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  // Lowest exponent with a nonzero coefficient, if any is known.
  std::optional<long> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  // Vanishing order: the valuation, or prec when nothing nonzero is known.
  long order() const { return terms_.empty() ? prec_ : terms_.begin()->first; }

  bool is_known_zero() const { return terms_.empty(); }

  const T& leading_coefficient() const {
    if (terms_.empty()) throw MathError("leading coefficient of a series with no known terms");
    return terms_.begin()->second;
  }

  LaurentSeries truncated(long prec) const {
    LaurentSeries r(std::min(prec, prec_));
    for (const auto& [e, c] : terms_) {
      if (e >= r.prec_) break;
      r.terms_.emplace(e, c);
    }
    return r;
  }

  // x^k * this
  LaurentSeries shifted(long k) const {
    LaurentSeries r(is_exact() ? kExact : prec_ + k);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  // x -> x^m for m >= 1.
  LaurentSeries dilated(long m) const {
    LaurentSeries r(is_exact() ? kExact : prec_ * m - (m - 1));
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * m, c);
    return r;
  }

  LaurentSeries scaled(const T& s) const {
    LaurentSeries r(prec_);
    if (is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    LaurentSeries<U> r(prec_);
    for (const auto& [e, c] : terms_) r.set(e, f(c));
    return r;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  LaurentSeries& operator+=(const LaurentSeries& o) { return accumulate(o, false); }
  LaurentSeries& operator-=(const LaurentSeries& o) { return accumulate(o, true); }
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const long prec = product_precision(a, b);
    LaurentSeries r(prec);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const long bmin = b.terms_.begin()->first;
    for (const auto& [ea, ca] : a.terms_) {
      if (ea + bmin >= prec) break;
      for (const auto& [eb, cb] : b.terms_) {
        const long e = ea + eb;
        if (e >= prec) break;
        T prod = ca * cb;
        auto [it, fresh] = r.terms_.try_emplace(e, prod);
        if (!fresh) it->second += prod;
      }
    }
    r.drop_zeros();
    return r;
  }

  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  // Multiplicative inverse; the relative precision is preserved.
  LaurentSeries inverse() const {
    if (terms_.empty()) throw DivisionByZero("inverse of a series with no known nonzero term");
    const long v = terms_.begin()->first;
    const T inv0 = T(1) / terms_.begin()->second;
    if (is_exact() && terms_.size() == 1) return monomial(inv0, -v);
    const long rel = relative_precision();
    if (rel >= kExact / 2) throw TruncationError("inverse of an exact non-monomial series needs a precision", 0);
    LaurentSeries r(-v + rel);
    // b_n = -inv0 * sum_{k=1..n} a_{v+k} b_{n-k}, indices relative to the leading term
    std::vector<T> b(static_cast<std::size_t>(rel));
    for (long n = 0; n < rel; ++n) {
      if (n == 0) {
        b[0] = inv0;
      } else {
        T acc(0);
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
          const long k = it->first - v;
          if (k > n) break;
          if (!is_zero(b[n - k])) acc += it->second * b[n - k];
        }
        b[n] = is_zero(acc) ? T(0) : -(acc * inv0);
      }
      if (!is_zero(b[n])) r.terms_.emplace(n - v, b[n]);
    }
    return r;
  }

  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

  LaurentSeries pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    LaurentSeries r = monomial(T(1), 0), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // The n-th root whose leading coefficient is `lead_root` (which must satisfy
  // lead_root^n = leading coefficient).  The valuation must be divisible by n.
  LaurentSeries root(long n, const T& lead_root) const {
    if (n <= 0) throw MathError("root index must be positive");
    if (terms_.empty()) throw MathError("root of a series with no known terms");
    const long v = terms_.begin()->first;
    if (v % n != 0) throw MathError("valuation not divisible by the root index");
    T check = lead_root;
    for (long k = 1; k < n; ++k) check = check * lead_root;
    if (!(check == leading_coefficient())) throw MathError("lead_root is not a root of the leading coefficient");
    const long rel = relative_precision();
    if (rel >= kExact / 2) throw TruncationError("root of an exact series needs a precision", 0);
    // g = this / (c x^v) = 1 + ...; f = g^(1/n):
    // m f_m = sum_{k=1..m} ((alpha+1) k - m) g_k f_{m-k}, alpha = 1/n
    const T inv_c = T(1) / leading_coefficient();
    std::map<long, T> g;
    for (const auto& [e, c] : terms_) g.emplace(e - v, c * inv_c);
    const T alpha1 = T(make_rational(n + 1, n));
    std::vector<T> f(static_cast<std::size_t>(rel));
    LaurentSeries r(v / n + rel);
    for (long m = 0; m < rel; ++m) {
      if (m == 0) {
        f[0] = T(1);
      } else {
        T acc(0);
        for (auto it = std::next(g.begin()); it != g.end(); ++it) {
          const long k = it->first;
          if (k > m) break;
          if (is_zero(f[m - k])) continue;
          acc += (alpha1 * T(k) - T(m)) * it->second * f[m - k];
        }
        f[m] = is_zero(acc) ? T(0) : acc * T(make_rational(1, m));
      }
      if (!is_zero(f[m])) r.terms_.emplace(v / n + m, f[m] * lead_root);
    }
    return r;
  }

  long relative_precision() const {
    if (is_exact()) return kExact;
    return prec_ - order();
  }

  // Text like "1 - 2*x^3 + O(x^5)" using the given coefficient printer.
  template <class P>
  std::string to_string(P&& print, const std::string& var = "x") const {
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + print(c) + ")";
      if (e != 0) s += "*" + var + (e == 1 ? "" : "^" + std::to_string(e));
    }
    if (!is_exact()) s += (s.empty() ? "" : " + ") + std::string("O(") + var + "^" + std::to_string(prec_) + ")";
    return s.empty() ? "0" : s;
  }

  // Equality of the known parts up to the common precision.
  friend bool agree(const LaurentSeries& a, const LaurentSeries& b) {
    const long p = std::min(a.prec_, b.prec_);
    return a.truncated(p).terms_ == b.truncated(p).terms_;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.prec_ == b.prec_ && a.terms_ == b.terms_;
  }

 private:
  static long product_precision(const LaurentSeries& a, const LaurentSeries& b) {
    const bool ae = a.is_exact(), be = b.is_exact();
    if (ae && be) return kExact;
    // zero operands: the product is zero to the other factor's precision bound
    const long va = a.order(), vb = b.order();
    long p = kExact;
    if (!ae) p = std::min(p, a.prec_ + vb);
    if (!be) p = std::min(p, b.prec_ + va);
    if (ae && a.terms_.empty()) return kExact;
    if (be && b.terms_.empty()) return kExact;
    return p;
  }

  LaurentSeries& accumulate(const LaurentSeries& o, bool negate) {
    prec_ = std::min(prec_, o.prec_);
    while (!terms_.empty() && std::prev(terms_.end())->first >= prec_) terms_.erase(std::prev(terms_.end()));
    for (const auto& [e, c] : o.terms_) {
      if (e >= prec_) break;
      auto [it, fresh] = terms_.try_emplace(e, negate ? -c : c);
      if (!fresh) {
        if (negate)
          it->second -= c;
        else
          it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
      }
    }
    return *this;
  }

  void drop_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  std::map<long, T> terms_;
  long prec_ = kExact;
};

}  // namespace klein11
