#include <gtest/gtest.h>

#include "klein11/covers/census.hpp"
#include "klein11/covers/schreier_sims.hpp"
#include "klein11/klein/resolvent.hpp"

using namespace klein11;

namespace {

const NamedForms& NF() { return build_named_forms(); }

const CurveCharts& charts() {
  static const CurveCharts cc = lift_charts(NF(), 40);
  return cc;
}

Cyclotomic r11() { return sqrt_m11(); }
Cyclotomic half(const Cyclotomic& x) { return x / Cyclotomic(2); }

// Is p in the rational span of the polynomials in `basis`?
bool in_span(const RationalPoly& p, const std::vector<RationalPoly>& basis) {
  std::map<Exponents, std::size_t> col;
  auto index = [&](const RationalPoly& q) {
    for (const auto& [e, c] : q.terms()) col.try_emplace(e, col.size());
  };
  for (const auto& b : basis) index(b);
  index(p);
  auto row = [&](const RationalPoly& q) {
    std::vector<Rational> r(col.size());
    for (const auto& [e, c] : q.terms()) r[col[e]] = c;
    return r;
  };
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : basis) rows.push_back(row(b));
  const auto r0 = rank(rows);
  rows.push_back(row(p));
  return rank(rows) == r0;
}

RationalPoly minor(int i, int k) {
  for (const auto& m : NF().H_ik)
    if (m.row == i && m.col == k) return m.value;
  throw MathError("no such minor");
}

}  // namespace

TEST(Forms, Degrees) {
  EXPECT_EQ(NF().nabla.degree(), 3);
  EXPECT_EQ(NF().H.degree(), 5);
  EXPECT_EQ(NF().Cform.degree(), 11);
  EXPECT_EQ(NF().H_ik.size(), 15u);
  for (const auto& m : NF().H_ik) EXPECT_EQ(m.value.degree(), 4);
  for (int v = 0; v < 11; ++v) {
    EXPECT_EQ(NF().phi[v].degree(), 2);
    EXPECT_EQ(NF().f[v].degree(), 3);
  }
}

TEST(Forms, NablaAsPrinted) {
  auto y = [](int s) { return yvar<Cyclotomic>(s); };
  EXPECT_EQ(NF().nabla, y(1) * y(1) * y(9) + y(4) * y(4) * y(3) + y(5) * y(5) * y(1) + y(9) * y(9) * y(4) +
                            y(3) * y(3) * y(5));
}

TEST(Forms, DeterminantMatrixIsHalfTheHessianOfNabla) {
  const auto h = hessian_matrix(to_rational(NF().nabla));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) EXPECT_EQ(h[i][j], NF().hessian_matrix[i][j].scaled(Rational(2)));
}

TEST(Forms, HIsInvariant) {
  for (char g : {'S', 'T', 'C'}) {
    const auto chi = relative_character(NF().H, letter_matrix(g));
    ASSERT_TRUE(chi.has_value());
    EXPECT_EQ(*chi, Cyclotomic(1)) << g;
  }
}

TEST(Forms, PZeroMatchesPrintedCoefficients) {
  // (1/sqrt(-11)) * (2 (rho^a - rho^b) + (rho^c - rho^d)) for y1, y4, y5, y9, y3
  const std::array<std::array<int, 4>, 5> printed{{{7, 1, 9, 10}, {6, 4, 3, 7}, {2, 5, 1, 6}, {8, 9, 4, 2}, {10, 3, 5, 8}}};
  SparsePoly expect;
  for (int i = 0; i < 5; ++i) {
    const auto [a, b, c, d] = printed[i];
    const Cyclotomic coef = (Cyclotomic(2) * (rho(a) - rho(b)) + (rho(c) - rho(d))) / r11();
    expect += SparsePoly::var(i).scaled(coef);
  }
  EXPECT_EQ(NF().p[1], expect);
  // p1 ... p4 are the cyclic images
  EXPECT_EQ(NF().p[2], cycle_variables(expect, 1));
}

TEST(Forms, PhiZeroIsSumOfSquares) {
  EXPECT_EQ(NF().phi_ratio, (Cyclotomic(-1) + r11()) / Cyclotomic(12));
}

TEST(Forms, FZeroIsSumOfCubesPlusNabla) {
  SparsePoly cubes;
  for (const auto& p : NF().p) cubes += p * p * p;
  EXPECT_EQ(NF().f[0], cubes.scaled(NF().f_split.lambda) + NF().nabla.scaled(NF().f_split.mu));
  // the multiplier of the cubes lies in Q(sqrt(-11))
  EXPECT_TRUE(as_quadratic(NF().f_split.lambda).has_value());
  EXPECT_EQ(NF().f_split.lambda, r11() / Cyclotomic(-6));
  EXPECT_EQ(NF().f_split.mu, Cyclotomic(3) * r11());
}

TEST(Forms, CInvariant) {
  EXPECT_TRUE(is_invariant(NF().Cform, {named("S"), named("T")}).invariant);
  // average relative to the sum of eleventh powers
  EXPECT_EQ(NF().c_average.scale, make_rational(1815, 31));
}

TEST(Forms, ElevenValuedForms) {
  const std::vector<NamedMatrix> sub{named("C"), named("S-1TS")};
  EXPECT_TRUE(is_invariant(NF().phi[0], sub).invariant);
  EXPECT_TRUE(is_invariant(NF().f[0], sub).invariant);
  EXPECT_TRUE(is_invariant(NF().f[0], {named("T")}).invariant);
  const auto r = is_invariant(NF().phi[0], {named("C"), named("S")});
  EXPECT_FALSE(r.invariant);
  EXPECT_EQ(r.witness, "S");
  EXPECT_FALSE(is_invariant(NF().f[0], {named("S")}).invariant);
}

TEST(Forms, TwistsAreTheSubstitutionByS) {
  // y_k -> rho^(k v) y_k
  for (int v = 0; v < 11; ++v) {
    SparsePoly expect;
    for (const auto& [e, c] : NF().phi[0].terms()) {
      long w = 0;
      for (int i = 0; i < 5; ++i) w += static_cast<long>(e[i]) * kVarSubscripts[i] * v;
      expect.add_term(e, c * rho(w));
    }
    EXPECT_EQ(NF().phi[v], expect);
  }
}

TEST(Forms, ConjugateSystem) {
  const auto& c = build_named_forms(true);
  EXPECT_EQ(c.phi[0], galois_conj(NF().phi[0], 10));
  EXPECT_FALSE(c.f[0] == NF().f[0]);
  EXPECT_TRUE(is_invariant(c.f[0], {named("C")}).invariant);
}

TEST(Forms, PrintedMinorEquations) {
  auto y = [](int s) { return yvar<Rational>(s); };
  const RationalPoly l1 = y(4) * y(5) * y(9) * y(3) - y(1) * y(1) * y(5) * y(3) + y(1) * y(1) * y(4) * y(4) +
                          y(3) * y(3) * y(3) * y(1);
  const RationalPoly l2 = y(1) * y(1) * y(5) * y(9) - y(4) * y(4) * y(5) * y(3) - y(3) * y(3) * y(1) * y(9);
  const RationalPoly l3 = y(4) * y(4) * y(4) * y(9) + y(9) * y(9) * y(9) * y(5) + y(3) * y(3) * y(3) * y(1);
  EXPECT_EQ(l1, -minor(0, 3));
  EXPECT_EQ(l2, -minor(0, 1));
  // the third line is not a single minor but lies in their span
  EXPECT_EQ(l3, -(minor(0, 3) + minor(2, 2)));
  const auto sys = minor_system(NF());
  for (const auto& l : {l1, l2, l3})
    for (int s = 0; s < 5; ++s) EXPECT_TRUE(in_span(cycle_variables(l, s), sys));
  EXPECT_FALSE(in_span(y(1) * y(1) * y(1) * y(1), sys));
}

TEST(Forms, ValuesPermuteLikeTheCover) {
  const auto s = value_permutation(NF(), generator_S());
  const auto t = value_permutation(NF(), generator_T());
  ASSERT_TRUE(s && t);
  EXPECT_EQ(*s, standard_eleven_cycle());
  EXPECT_EQ(t->cycle_type(), (std::vector<int>{2, 2, 2, 2, 1, 1, 1}));
  EXPECT_EQ(group_order<11>({*s, *t}), 660u);
  const auto census = enumerate_covers();
  const auto idx = find_class(census.classes, *t);
  ASSERT_TRUE(idx.has_value());
  EXPECT_EQ(monodromy_order(census.classes[*idx]), 660u);
  EXPECT_TRUE(period_criterion(census.classes[*idx]).accept);
}

TEST(Curve, ChartsSatisfyAllMinors) {
  const auto& cc = charts();
  EXPECT_TRUE(minors_vanish(cc));
  for (const auto& r : cc.residual_orders) {
    ASSERT_EQ(r.size(), 15u);
    for (long o : r) EXPECT_GE(o, 40);
  }
}

TEST(Curve, ChartIIILeadingTerms) {
  // Oracle: the prototype expansion y1 = t^10 + t^21, y4 = t^6 - t^28, y9 = -t^3 - t^36.
  const auto& c = charts().charts[chart_position("III")];
  const auto& y1 = c.series[var_index(1)];
  const auto& y4 = c.series[var_index(4)];
  const auto& y9 = c.series[var_index(9)];
  EXPECT_EQ(y1.terms(), (std::map<long, Rational>{{10, Rational(1)}, {21, Rational(1)}}));
  EXPECT_EQ(y4.terms(), (std::map<long, Rational>{{6, Rational(1)}, {28, Rational(-1)}}));
  EXPECT_EQ(y9.terms(), (std::map<long, Rational>{{3, Rational(-1)}, {36, Rational(-1)}}));
}

TEST(Curve, ChartsAreCyclicImages) {
  const auto& cc = charts();
  for (int p = 0; p < 5; ++p) {
    const auto moved = cycle_chart(cc.charts[p], 1);
    const auto& target = cc.charts[(p + 1) % 5];
    EXPECT_EQ(moved.label, target.label);
    for (int j = 0; j < 5; ++j) EXPECT_TRUE(agree(moved.series[j], target.series[j]));
  }
}

TEST(Curve, DegreeTwenty) {
  std::array<long, 5> sums{};
  EXPECT_EQ(curve_degree_certificate(charts().charts, &sums), 20);
  for (long s : sums) EXPECT_EQ(s, 20);
  for (long o : nabla_orders(NF(), charts())) EXPECT_EQ(o, 1);
}

TEST(Curve, DegreeCertificateRejectsBadCharts) {
  auto bad = charts().charts;
  bad[0].series[var_index(4)] = bad[0].series[var_index(4)].shifted(1);
  EXPECT_THROW(curve_degree_certificate(bad), VerificationFailure);
  auto shallow = charts().charts;
  shallow[2].order = 5;
  EXPECT_THROW(curve_degree_certificate(shallow), MathError);
}

TEST(Curve, Genus) {
  const auto g = genus_certificate();
  EXPECT_EQ(g.genus, Rational(26));
  EXPECT_EQ(g.without_third, Rational(-139));
  EXPECT_EQ(g.with_third_three, Rational(81));
  for (const auto& [v, p] : g.third_period_scan)
    if (v > 2) EXPECT_GE(p, Rational(81));
}

TEST(Curve, ValuesAtChartI) {
  const auto& c = charts().charts[chart_position("I")];
  const auto nab = series_eval(NF().nabla, c.series);
  EXPECT_EQ(nab.truncated(2).terms(), (std::map<long, Cyclotomic>{{1, Cyclotomic(1)}}));
  const auto cf = series_eval(NF().Cform, c.series);
  EXPECT_EQ(cf.coefficient(0), Cyclotomic(1));
}

TEST(Resolvent, PhiSeriesAtChartI) {
  // phi_v = rho^(6v) - rho^(8v) t + rho^(10v) t^2 + h rho^v t^3 + h rho^(3v) t^4 + ...
  // with h = (1 - sqrt(-11))/2; the printed index v is our 3v.
  const auto& c = charts().charts[chart_position("I")];
  const Cyclotomic h = half(Cyclotomic(1) - r11());
  for (int v = 0; v < 11; ++v) {
    const auto s = series_eval(NF().phi[(3 * v) % 11], c.series);
    EXPECT_EQ(s.coefficient(0), rho(6 * v));
    EXPECT_EQ(s.coefficient(1), -rho(8 * v));
    EXPECT_EQ(s.coefficient(2), rho(10 * v));
    EXPECT_EQ(s.coefficient(3), h * rho(v));
    EXPECT_EQ(s.coefficient(4), h * rho(3 * v));
  }
}

TEST(Resolvent, ZConstants) {
  const auto r = derive_resolvent_z(NF(), charts().charts[0]);
  const Cyclotomic one(1);
  EXPECT_EQ(r.A, Cyclotomic(-3));
  EXPECT_EQ(r.B, Cyclotomic(5) - r11());
  EXPECT_EQ(r.a, one);
  EXPECT_EQ(r.b, Cyclotomic(-3) * half(one + r11()));
  EXPECT_EQ(r.c, half(Cyclotomic(7) - r11()));
  EXPECT_EQ(r.A1, Cyclotomic(4));
  EXPECT_EQ(r.B1, half(Cyclotomic(7) - Cyclotomic(5) * r11()));
  EXPECT_EQ(r.Gamma, Cyclotomic(4) - Cyclotomic(6) * r11());
  EXPECT_EQ(r.alpha, Cyclotomic(-2));
  EXPECT_EQ(r.beta, Cyclotomic(3) * half(one - r11()));
  EXPECT_EQ(r.gamma, Cyclotomic(5) + r11());
  EXPECT_EQ(r.delta, Cyclotomic(-3) * half(Cyclotomic(5) + r11()));
  EXPECT_EQ(r.k, make_rational(-1, 1728));
  EXPECT_EQ(r.kappa_series, r.kappa_poly);
  EXPECT_GE(r.matched_orders, 24);
  EXPECT_EQ(r.P, r.numerator_J());
}

TEST(Resolvent, ZStableUnderChartChoice) {
  const auto r0 = derive_resolvent_z(NF(), charts().charts[0]);
  for (int p = 1; p < 5; ++p) {
    const auto r = derive_resolvent_z(NF(), charts().charts[p]);
    EXPECT_EQ(r.P, r0.P) << r.chart;
    EXPECT_EQ(r.numerator_J1(), r0.numerator_J1()) << r.chart;
    EXPECT_EQ(r.k, r0.k);
  }
}

TEST(Resolvent, ZNeedsAnOrderThirtyChart) {
  const auto shallow = lift_chart(NF(), "I", 20);
  EXPECT_THROW(derive_resolvent_z(NF(), shallow), MathError);
}

TEST(Resolvent, PrintedIdentity) {
  const auto p = printed_resolvent_z();
  EXPECT_EQ(j_numerator_difference(p.quad, p.cubic, p.cubic2, p.quartic), ZPoly(Cyclotomic(-1728)));
  // negative control: one perturbed constant breaks it
  const auto broken = p.quad + ZPoly(Cyclotomic(1));
  EXPECT_GT(j_numerator_difference(broken, p.cubic, p.cubic2, p.quartic).degree(), 0);
}

TEST(Resolvent, XiConstants) {
  const auto x = derive_resolvent_xi(NF(), charts().charts[0]);
  const auto printed = printed_xi_constants();
  EXPECT_EQ(x.alpha, printed[0]);
  EXPECT_EQ(x.beta, printed[1]);
  EXPECT_EQ(x.gamma, printed[2]);
  EXPECT_EQ(x.delta, printed[3]);
  EXPECT_EQ(x.epsilon, printed[4]);
  EXPECT_EQ(x.zeta, printed[5]);
  EXPECT_GE(x.equations, 30u);
  // xi^4 carries -11 * 12 g2 / cbrt(Delta), the xi term -11 (-3 + r)/2 * 12 g2 / cbrt(Delta)
  EXPECT_EQ(x.xi4, Cyclotomic(-11 * 12));
  EXPECT_EQ(x.xi1, Cyclotomic(-12) * x.epsilon);
  EXPECT_EQ(x.xi0, Cyclotomic(-144));
}

TEST(Resolvent, XiEquationEliminatesToZEquation) {
  const auto x = derive_resolvent_xi(NF(), charts().charts[0]);
  const auto p = printed_resolvent_z();
  EXPECT_TRUE(xi_to_z_elimination(x, p.quad, p.cubic, p.k).is_zero());
  EXPECT_FALSE(xi_to_z_elimination(x, p.quad, p.cubic, make_rational(1, 1728)).is_zero());
}

TEST(Resolvent, XiOnOtherValues) {
  for (int v : {1, 5}) {
    const auto x = derive_resolvent_xi(NF(), charts().charts[2], v);
    EXPECT_EQ(x.alpha, Cyclotomic(-22));
    EXPECT_EQ(x.zeta, Cyclotomic(-1));
  }
}

TEST(Resolvent, Bridge) {
  for (int p = 0; p < 5; ++p)
    for (int v : {0, 4}) {
      const auto b = verify_bridge(NF(), charts().charts[p], v);
      EXPECT_TRUE(b.ok) << b.chart << " " << v;
      EXPECT_GE(b.homogeneous_residual, 40);
      EXPECT_LT(b.inhomogeneous_residual, 40);
    }
}

TEST(Resolvent, ConjugateSystemGivesConjugateConstants) {
  const auto& c = build_named_forms(true);
  const auto r = derive_resolvent_z(c, charts().charts[0]);
  EXPECT_EQ(r.B, Cyclotomic(5) + r11());
  EXPECT_EQ(r.k, make_rational(-1, 1728));
  EXPECT_TRUE(verify_bridge(c, charts().charts[0]).ok);
}
