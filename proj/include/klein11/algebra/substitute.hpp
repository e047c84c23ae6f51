#pragma once

// Substitutions into SparsePoly: linear changes of variables and series.
//
// Convention: a matrix M acts on polynomials by p(y) -> p(M y), i.e. y_i is
// replaced by sum_j M[i][j] y_j.  Hence sub(sub(p, A), B) = sub(p, A * B).

#include <vector>

#include "klein11/algebra/laurent_series.hpp"
#include "klein11/algebra/matrix.hpp"
#include "klein11/algebra/sparse_poly.hpp"

namespace klein11 {

template <class T>
Poly<T> linear_form(const std::array<T, 5>& row) {
  Poly<T> l;
  for (int j = 0; j < 5; ++j) l.add_term(Poly<T>::var(j).terms().begin()->first, row[j]);
  return l;
}

namespace detail {

// Each row has exactly one nonzero entry: returns (column, value) per row.
template <class T>
std::optional<std::array<std::pair<int, T>, 5>> monomial_rows(const Matrix5<T>& m) {
  std::array<std::pair<int, T>, 5> out;
  for (int i = 0; i < 5; ++i) {
    int col = -1;
    for (int j = 0; j < 5; ++j) {
      if (is_zero(m[i][j])) continue;
      if (col >= 0) return std::nullopt;
      col = j;
    }
    if (col < 0) return std::nullopt;
    out[i] = {col, m[i][col]};
  }
  return out;
}

}  // namespace detail

template <class T>
Poly<T> linear_substitute(const Poly<T>& p, const Matrix5<T>& m, bool check_invertible = true) {
  if (auto rows = detail::monomial_rows(m)) {
    // Monomial matrix: each term maps to a single term.
    Poly<T> r;
    std::array<std::vector<T>, 5> pw;
    for (const auto& [e, c] : p.terms()) {
      Exponents f{};
      T coef = c;
      for (int i = 0; i < 5; ++i) {
        if (e[i] == 0) continue;
        const auto& [col, val] = (*rows)[i];
        f[col] = static_cast<std::uint8_t>(f[col] + e[i]);
        auto& cache = pw[i];
        if (cache.empty()) cache.push_back(T(1));
        while (cache.size() <= e[i]) cache.push_back(cache.back() * val);
        coef = coef * cache[e[i]];
      }
      r.add_term(f, coef);
    }
    std::array<bool, 5> hit{};
    for (const auto& [col, val] : *rows) hit[col] = true;
    for (bool h : hit)
      if (!h) throw DivisionByZero("linear_substitute: singular matrix");
    return r;
  }
  if (check_invertible && is_zero(determinant(m))) throw DivisionByZero("linear_substitute: singular matrix");
  std::array<std::vector<Poly<T>>, 5> pw;
  for (int i = 0; i < 5; ++i) pw[i].push_back(Poly<T>(T(1)));
  auto power = [&](int i, int k) -> const Poly<T>& {
    while (static_cast<int>(pw[i].size()) <= k) {
      if (pw[i].size() == 1) pw[i].push_back(linear_form(m[i]));
      else pw[i].push_back(pw[i].back() * pw[i][1]);
    }
    return pw[i][k];
  };
  Poly<T> r;
  for (const auto& [e, c] : p.terms()) {
    Poly<T> t(c);
    for (int i = 0; i < 5; ++i)
      if (e[i]) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

template <class T>
using SeriesTuple = std::array<LaurentSeries<T>, 5>;

inline Cyclotomic lift_coefficient(const Rational& q, const Cyclotomic*) { return Cyclotomic(q); }
inline const Cyclotomic& lift_coefficient(const Cyclotomic& c, const Cyclotomic*) { return c; }
inline const Rational& lift_coefficient(const Rational& q, const Rational*) { return q; }

// p(y_1(x), ..., y_3(x)) with the five series substituted; monomials are
// formed over the series field R, then scaled by the coefficients of p.
template <class C, class R>
LaurentSeries<C> series_eval(const Poly<C>& p, const SeriesTuple<R>& ys) {
  std::array<std::vector<LaurentSeries<R>>, 5> pw;
  for (int i = 0; i < 5; ++i) pw[i].push_back(LaurentSeries<R>::monomial(R(1), 0));
  auto power = [&](int i, int k) -> const LaurentSeries<R>& {
    while (static_cast<int>(pw[i].size()) <= k) pw[i].push_back(pw[i].back() * ys[i]);
    return pw[i][k];
  };
  LaurentSeries<C> total;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    LaurentSeries<R> t = LaurentSeries<R>::monomial(R(1), 0);
    for (int i = 0; i < 5; ++i)
      if (e[i]) t = t * power(i, e[i]);
    LaurentSeries<C> term(t.precision());
    for (const auto& [x, v] : t.terms()) term.set(x, lift_coefficient(v, static_cast<const C*>(nullptr)) * c);
    if (first) {
      total = term;
      first = false;
    } else {
      total += term;
    }
  }
  return total;  // exactly zero for the zero polynomial
}

// As above, but insists the result is known below `order`.
template <class C, class R>
LaurentSeries<C> series_eval_to(const Poly<C>& p, const SeriesTuple<R>& ys, long order) {
  bool power_series = true;
  for (const auto& s : ys) power_series = power_series && s.order() >= 0;
  SeriesTuple<R> cut = ys;
  // with no poles nothing at or above `order` can feed lower terms
  if (power_series)
    for (auto& s : cut) s = s.truncated(order);
  auto r = series_eval(p, cut);
  if (r.precision() < order)
    throw TruncationError("series_eval: requested order " + std::to_string(order) + " exceeds achievable " +
                              std::to_string(r.precision()),
                          r.precision());
  return r.truncated(order);
}

}  // namespace klein11
