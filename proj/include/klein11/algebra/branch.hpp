#pragma once

// Power-series branches of a curve through the five coordinate points,
// computed by undetermined coefficients.
//
// Gauge: the unit coordinate is exactly 1 and the parameter coordinate is
// exactly t; the remaining three coordinates are solved for order by order.

#include <string>
#include <vector>

#include "klein11/algebra/matrix.hpp"
#include "klein11/algebra/substitute.hpp"

namespace klein11 {

inline const std::array<std::string, 5>& chart_labels() {
  // The coordinate point where y_k = 1 carries the roman numeral of k.
  static const std::array<std::string, 5> labels{"I", "IV", "V", "IX", "III"};
  return labels;
}

inline int chart_position(const std::string& label) {
  for (int p = 0; p < 5; ++p)
    if (chart_labels()[p] == label) return p;
  throw ParseError("unknown chart label '" + label + "'");
}

template <class T>
struct BranchChart {
  std::string label;
  int unit = 0;       // storage index with y = 1
  int parameter = 3;  // storage index with y = t
  SeriesTuple<T> series;
  long order = 0;     // unknown coordinates are known below this exponent
};

class RankDeficiency : public MathError {
 public:
  RankDeficiency(long order, std::size_t kernel_dim, bool inconsistent)
      : MathError("branch lifting failed at order " + std::to_string(order) +
                  (inconsistent ? ": inconsistent system"
                                : ": kernel dimension " + std::to_string(kernel_dim))),
        order_(order),
        kernel_dim_(kernel_dim) {}
  long order() const { return order_; }
  std::size_t kernel_dimension() const { return kernel_dim_; }

 private:
  long order_;
  std::size_t kernel_dim_;
};

// The leading terms at a coordinate point: the pattern (1, t^10, t^6, t, -t^3)
// read cyclically from the unit coordinate, known below t^11.
template <class T>
BranchChart<T> leading_term_seed(const std::string& label) {
  const int p = chart_position(label);
  BranchChart<T> c;
  c.label = label;
  c.unit = p;
  c.parameter = (p + 3) % 5;
  c.order = 11;
  const std::array<std::pair<long, long>, 5> pattern{{{0, 1}, {10, 1}, {6, 1}, {1, 1}, {3, -1}}};
  for (int k = 0; k < 5; ++k) {
    const int idx = (p + k) % 5;
    const bool exact = idx == c.unit || idx == c.parameter;
    c.series[idx] = LaurentSeries<T>::monomial(T(pattern[k].second), pattern[k].first,
                                               exact ? LaurentSeries<T>::kExact : c.order);
  }
  return c;
}

template <class T>
std::vector<int> unknown_coordinates(const BranchChart<T>& c) {
  std::vector<int> u;
  for (int i = 0; i < 5; ++i)
    if (i != c.unit && i != c.parameter) u.push_back(i);
  return u;
}

// Extends the chart so every polynomial in `system` vanishes below t^target.
// Orders are solved `step` at a time (capped so each block stays affine).
// The lift starts from the bare point; coefficients present in `seed` must be
// reproduced, otherwise the seed is rejected.
template <class T>
BranchChart<T> lift_branch(const std::vector<Poly<T>>& system, const BranchChart<T>& seed, long target,
                           long step = 1) {
  BranchChart<T> c;
  c.label = seed.label;
  c.unit = seed.unit;
  c.parameter = seed.parameter;
  c.series[c.unit] = LaurentSeries<T>::monomial(T(1), 0);
  c.series[c.parameter] = LaurentSeries<T>::monomial(T(1), 1);
  const auto unk = unknown_coordinates(c);
  std::array<std::map<long, T>, 5> known;

  auto residual = [&](long n, long s, const std::vector<T>& b) {
    SeriesTuple<T> ys = c.series;
    for (std::size_t u = 0; u < unk.size(); ++u) {
      auto terms = known[unk[u]];
      for (long k = 0; k < s; ++k) terms[n + k] = b[u * s + k];
      ys[unk[u]] = LaurentSeries<T>::from_terms(terms, n + s);
    }
    std::vector<T> out;
    for (const auto& f : system) {
      const auto v = series_eval(f, ys);
      for (long k = 0; k < s; ++k) out.push_back(v.coefficient(n + k));
    }
    return out;
  };

  for (long n = 1; n < target;) {
    const long s = std::max(1L, std::min({step, n, target - n}));
    const std::size_t nb = unk.size() * s;
    const std::vector<T> zero(nb, T(0));
    const auto r0 = residual(n, s, zero);
    std::vector<std::vector<T>> a(r0.size(), std::vector<T>(nb));
    for (std::size_t j = 0; j < nb; ++j) {
      auto e = zero;
      e[j] = T(1);
      const auto rj = residual(n, s, e);
      for (std::size_t i = 0; i < r0.size(); ++i) a[i][j] = rj[i] - r0[i];
    }
    std::vector<T> rhs(r0.size());
    for (std::size_t i = 0; i < r0.size(); ++i) rhs[i] = -r0[i];
    std::vector<T> b;
    SolveFailure fail;
    try {
      b = solve_unique(a, rhs, &fail);
    } catch (const MathError&) {
      throw RankDeficiency(n, fail.kernel_dimension, fail.inconsistent);
    }
    for (std::size_t u = 0; u < unk.size(); ++u)
      for (long k = 0; k < s; ++k)
        if (!is_zero(b[u * s + k])) known[unk[u]][n + k] = b[u * s + k];
    n += s;
  }
  for (int u : unk) c.series[u] = LaurentSeries<T>::from_terms(known[u], target);
  c.order = target;

  for (int i = 0; i < 5; ++i) {
    const long upto = std::min(seed.series[i].precision(), target);
    for (long e = 0; e < upto; ++e)
      if (!(seed.series[i].coefficient(e) == c.series[i].coefficient(e)))
        throw MathError("seed disagrees with the lifted branch at y" + std::to_string(kVarSubscripts[i]) +
                        ", order " + std::to_string(e));
  }
  return c;
}

// Vanishing order of each polynomial along the chart.
template <class C, class T>
std::vector<long> residual_orders(const std::vector<Poly<C>>& system, const BranchChart<T>& chart) {
  std::vector<long> out;
  for (const auto& f : system) out.push_back(series_eval(f, chart.series).order());
  return out;
}

// The chart moved along y1 -> y4 -> y5 -> y9 -> y3 by `steps` positions.
template <class T>
BranchChart<T> cycle_chart(const BranchChart<T>& c, int steps = 1) {
  const int s = ((steps % 5) + 5) % 5;
  BranchChart<T> r;
  r.unit = (c.unit + s) % 5;
  r.parameter = (c.parameter + s) % 5;
  r.label = chart_labels()[r.unit];
  r.order = c.order;
  for (int i = 0; i < 5; ++i) r.series[(i + s) % 5] = c.series[i];
  return r;
}

// Leading exponent of each coordinate.
template <class T>
std::array<long, 5> leading_exponents(const BranchChart<T>& c) {
  std::array<long, 5> out{};
  for (int i = 0; i < 5; ++i) out[i] = c.series[i].order();
  return out;
}

}  // namespace klein11
