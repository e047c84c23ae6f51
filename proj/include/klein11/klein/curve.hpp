#pragma once

// The double curve of H = 0: branches at the five coordinate points, the
// degree count from their leading orders, and the genus from branching data.

#include <array>
#include <string>
#include <vector>

#include "klein11/algebra/branch.hpp"
#include "klein11/covers/census.hpp"
#include "klein11/klein/forms.hpp"

namespace klein11 {

using Chart = BranchChart<Rational>;

struct CurveCharts {
  long order = 0;
  std::array<Chart, 5> charts;  // in label order I, IV, V, IX, III
  std::array<std::vector<long>, 5> residual_orders;  // of the 15 minors
};

inline Chart lift_chart(const NamedForms& nf, const std::string& label, long order) {
  return lift_branch(minor_system(nf), leading_term_seed<Rational>(label), order);
}

// Lifts all five charts independently and records the minors' vanishing orders.
inline CurveCharts lift_charts(const NamedForms& nf, long order) {
  CurveCharts cc;
  cc.order = order;
  const auto sys = minor_system(nf);
  for (int p = 0; p < 5; ++p) {
    cc.charts[p] = lift_branch(sys, leading_term_seed<Rational>(chart_labels()[p]), order);
    cc.residual_orders[p] = residual_orders(sys, cc.charts[p]);
  }
  return cc;
}

inline bool minors_vanish(const CurveCharts& cc) {
  for (const auto& r : cc.residual_orders)
    for (long o : r)
      if (o < cc.order) return false;
  return true;
}

// For each coordinate, the sum of its leading orders over the four charts
// where it is not the unit; these are the intersections with y_k = 0.
inline long curve_degree_certificate(const std::array<Chart, 5>& charts, std::array<long, 5>* sums = nullptr) {
  std::array<long, 5> s{};
  for (const auto& c : charts) {
    if (c.order < 11) throw MathError("degree certificate needs charts lifted to order 11");
    int units = 0;
    for (int j = 0; j < 5; ++j) {
      const auto v = c.series[j].valuation();
      if (!v) throw MathError("coordinate vanishes to the working order in chart " + c.label);
      if (*v == 0) {
        ++units;
        continue;
      }
      s[j] += *v;
    }
    if (units != 1) throw MathError("chart " + c.label + " does not have exactly one unit coordinate");
  }
  if (sums) *sums = s;
  for (int j = 1; j < 5; ++j)
    if (s[j] != s[0])
      throw VerificationFailure("unequal hyperplane intersection counts: y" + std::to_string(kVarSubscripts[0]) +
                                    " gives " + std::to_string(s[0]) + ", y" + std::to_string(kVarSubscripts[j]) +
                                    " gives " + std::to_string(s[j]),
                                j);
  return s[0];
}

struct GenusCertificate {
  Rational genus;              // with branching of periods 3, 11, 2
  Rational without_third;      // periods 3, 11 only
  Rational with_third_three;   // periods 3, 11, 3, a lower bound for any other third period
  std::vector<std::pair<long, Rational>> third_period_scan;  // genus for each admissible third period
};

inline GenusCertificate genus_certificate() {
  GenusCertificate g;
  g.genus = regular_genus(660, {3, 11, 2});
  g.without_third = regular_genus(660, {3, 11});
  g.with_third_three = regular_genus(660, {3, 11, 3});
  for (long v : {2L, 3L, 5L, 6L, 11L}) g.third_period_scan.emplace_back(v, regular_genus(660, {3, 11, v}));
  return g;
}

// Vanishing order of nabla along each chart.
inline std::array<long, 5> nabla_orders(const NamedForms& nf, const CurveCharts& cc) {
  std::array<long, 5> out{};
  for (int p = 0; p < 5; ++p) out[p] = series_eval(nf.nabla, cc.charts[p].series).order();
  return out;
}

}  // namespace klein11
