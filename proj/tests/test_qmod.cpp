#include <gtest/gtest.h>

#include "klein11/klein/curve.hpp"
#include "klein11/qmod/identities.hpp"
#include "klein11/qmod/spotcheck.hpp"

using namespace klein11;

namespace {

constexpr long kN = 1200;

const ThetaFamily& theta() {
  static const ThetaFamily t = build_theta(kN);
  return t;
}

const YCurve& curve() {
  static const YCurve c = reconstruct_y(kN);
  return c;
}

}  // namespace

TEST(USeries, QExponentsLandOnTheLattice) {
  EXPECT_EQ(q_to_u(make_rational(121, 132)), 121);
  EXPECT_EQ(q_to_u(make_rational(2, 11)), 24);
  EXPECT_EQ(q_to_u(make_rational(1, 66)), 2);
  EXPECT_EQ(q_to_u(make_rational(11, 6)), 242);
  EXPECT_THROW(q_to_u(make_rational(1, 264)), MathError);
}

TEST(USeries, WeightsAreTracked) {
  const auto a = URSeries::constant(Rational(1), make_rational(1, 2));
  const auto b = URSeries::constant(Rational(1), Rational(1));
  EXPECT_THROW(a + b, WeightMismatch);
  EXPECT_EQ((a * b).weight, make_rational(3, 2));
  EXPECT_EQ(a.pow(4).weight, Rational(2));
  EXPECT_EQ((b / a).weight, make_rational(1, 2));
  EXPECT_NO_THROW(a * a + b);
}

TEST(USeries, DivisorSums) {
  EXPECT_EQ(divisor_power_sum(1, 3), 1);
  EXPECT_EQ(divisor_power_sum(6, 3), 1 + 8 + 27 + 216);
  EXPECT_EQ(divisor_power_sum(4, 5), 1 + 32 + 1024);
}

TEST(Theta, ExponentsAreOneModTwelve) {
  for (const auto& a : theta().A) {
    EXPECT_EQ(a.weight, make_rational(1, 2));
    for (const auto& [e, c] : a.s.terms()) ASSERT_EQ(((e % 12) + 12) % 12, 1) << e;
  }
}

TEST(Theta, LeadingTermsAndDsSigns) {
  // A1 starts 1 * u^1, i.e. q^0 once q^(1/132) is removed.
  EXPECT_EQ(theta()[1].s.order(), 1);
  EXPECT_EQ(theta()[1].s.leading_coefficient(), Rational(1));
  const auto leads = theta_leads(theta());
  const std::array<long, 6> rel{120, 0, 168, 48, 360, 24};
  const std::array<int, 6> ds_sign{-1, 1, -1, -1, 1, 1};
  const std::array<long, 6> ds_power{5, 0, 7, 2, 15, 1};
  for (int s = 0; s < 6; ++s) {
    EXPECT_EQ(leads[s].relative_exponent, rel[s]) << "A_" << leads[s].index;
    EXPECT_EQ(leads[s].ds_sign, ds_sign[s]) << "A_" << leads[s].index;
    EXPECT_EQ(leads[s].ds_power, ds_power[s]) << "A_" << leads[s].index;
  }
}

TEST(Theta, PrintedLinesAgreeExceptOneTermOfA1) {
  ASSERT_EQ(theta().discrepancies.size(), 1u);
  const auto& d = theta().discrepancies.front();
  EXPECT_EQ(d.index, 1);
  EXPECT_EQ(d.exponent, 529);
  EXPECT_EQ(d.printed, 0);
  EXPECT_EQ(d.general, 1);
  try {
    build_theta(kN, true);
    FAIL() << "strict build accepted the printed A1";
  } catch (const VerificationFailure& e) {
    EXPECT_EQ(e.exponent(), 529);
    EXPECT_NE(std::string(e.what()).find("A_1"), std::string::npos);
  }
  // Below the missing term the strict build succeeds.
  EXPECT_NO_THROW(build_theta(529, true));
}

TEST(Theta, BuildsAreNested) {
  const auto small = build_theta(400);
  for (int s = 0; s < 6; ++s) EXPECT_TRUE(agree(small.A[s].s, theta().A[s].s));
  EXPECT_THROW(build_theta(0), MathError);
}

TEST(Modular, DiscriminantRelation) {
  const auto m = build_modular_scalars(kN);
  EXPECT_TRUE(discriminant_residual(m).s.is_known_zero());
  EXPECT_EQ(discriminant_residual(m).precision(), kN);
  EXPECT_EQ(m.Delta.s.order(), 264);
  EXPECT_EQ(m.Delta.s.coefficient(528), Rational(-24));
}

TEST(Modular, RadicalsOfDelta) {
  const auto m = build_modular_scalars(kN);
  // The twelfth root from the series root agrees with the separate eta product.
  EXPECT_TRUE(agree(m.root(12).s, m.eta2.s));
  EXPECT_EQ(m.root(12).precision(), kN);
  for (int k : {2, 3, 4, 6, 12}) {
    EXPECT_EQ(m.root(k).weight, make_rational(12, k));
    EXPECT_TRUE(agree(m.root(k).s.pow(k), m.Delta.s)) << k;
    EXPECT_EQ(m.root(k).s.order(), 264 / k);
  }
  EXPECT_THROW(m.root(5), MathError);
}

TEST(Modular, ClassicalJExpansion) {
  // 1728 J = 1/x + 744 + 196884 x + 21493760 x^2 + 864299970 x^3 + ...
  const auto j = classical_j_series(4).scaled(Rational(1728));
  EXPECT_EQ(j.coefficient(-1), Rational(1));
  EXPECT_EQ(j.coefficient(0), Rational(744));
  EXPECT_EQ(j.coefficient(1), Rational(196884));
  EXPECT_EQ(j.coefficient(2), Rational(21493760));
  EXPECT_EQ(j.coefficient(3), Rational(864299970));
}

TEST(Brioschi, VanishesAtNAndTwoN) {
  const auto r = verify_brioschi(theta(), kN);
  EXPECT_GE(r.residual_order, kN);
  EXPECT_EQ(r.leading_exponent, 605);  // 5 * 121 = 1 + 169 + 49 + 361 + 25
  EXPECT_GE(verify_brioschi(2 * kN).residual_order, 2 * kN);
  EXPECT_GE(verify_brioschi(600).residual_order, 600);
}

TEST(Brioschi, FlippedSignInA9IsCaught) {
  ThetaFamily bad = theta();
  auto& a9 = bad.A[theta_slot(9)].s;
  a9.set(625, -a9.coefficient(625));
  try {
    verify_brioschi(bad, kN);
    FAIL() << "fault not detected";
  } catch (const VerificationFailure& e) {
    EXPECT_LT(e.exponent(), kN);
  }
}

TEST(Multiplier, AllTwelveRoots) {
  const auto r = verify_multiplier(kN);
  for (int i = 0; i < 12; ++i) {
    EXPECT_GE(r.squared_roots[i], kN) << root_name(i);
    EXPECT_GE(r.degree12_equation[i], kN) << root_name(i);
  }
  EXPECT_GE(r.trace_order, kN);
}

TEST(Multiplier, ZZeroIsTheSquareOfTheFullSum) {
  const auto roots = multiplier_roots(theta(), kN);
  URSeries sum = theta().A[0];
  for (int s = 1; s < 6; ++s) sum += theta().A[s];
  EXPECT_TRUE(agree(roots.from_eta[1].s, to_cyclotomic(sum.pow(2)).s));
  EXPECT_EQ(roots.from_eta[1].weight, Rational(1));
}

TEST(Multiplier, WrongRootIsRejected) {
  const auto ms = build_modular_scalars(kN);
  const auto roots = multiplier_roots(theta(), kN);
  const auto r = multiplier_equation(roots.from_eta[3].scaled(Cyclotomic(2)), ms);
  EXPECT_LT(r.s.order(), kN);
  // A weight-2 argument is not homogeneous in the equation.
  EXPECT_THROW(multiplier_equation(roots.from_eta[3].pow(2), ms), WeightMismatch);
}

TEST(Curve, ReconstructionChecks) {
  const auto& c = curve();
  EXPECT_GE(c.closing_order, kN);
  EXPECT_GE(c.cycle_order, kN);
  EXPECT_EQ(c.shift, 460);
  for (const auto& y : c.y) EXPECT_EQ(y.weight, Rational(2));
}

TEST(Curve, LeadingExponentsMatchChartIII) {
  // In units of ds the leading exponents are those of the branch through the
  // coordinate point of y3.
  const auto& nf = build_named_forms();
  const auto chart = lift_chart(nf, "III", 12);
  for (int i = 0; i < 5; ++i) {
    ASSERT_EQ(curve().leading[i] % 24, 0);
    EXPECT_EQ(curve().leading[i] / 24, *chart.series[i].valuation()) << i;
  }
}

TEST(Curve, AllMinorsVanish) {
  const auto r = verify_hik(curve(), build_named_forms());
  for (long o : r.residual_orders) EXPECT_GE(o, kN);
}

TEST(Curve, RegaugingShiftsOrdersByFour) {
  // A perturbed curve leaves finite residuals; a common factor of order k
  // moves each of them by exactly 4k.
  const auto& nf = build_named_forms();
  auto ys = curve().series();
  ys[0] = ys[0] + LaurentSeries<Rational>::monomial(Rational(1), 300);
  const long k = 7;
  const auto g = LaurentSeries<Rational>::from_terms({{k, Rational(2)}, {k + 12, Rational(-3)}, {k + 36, Rational(1)}},
                                                     LaurentSeries<Rational>::kExact);
  auto gs = ys;
  for (auto& s : gs) s = s * g;
  int finite = 0;
  for (const auto& m : nf.H_ik) {
    const auto a = series_eval(m.value, ys);
    const auto b = series_eval(m.value, gs);
    EXPECT_EQ(b.order(), a.order() + 4 * k);
    if (a.order() < kN) ++finite;
  }
  EXPECT_GT(finite, 0);
}

TEST(JIdentity, MatchesClassicalJInQSquared) {
  const auto r = verify_J_identity(kN, build_named_forms());
  EXPECT_EQ(r.winner, "x = q^2");
  EXPECT_GE(r.matched, kMinJCoefficients);
  ASSERT_GE(r.coefficients.size(), 3u);
  EXPECT_EQ(r.coefficients[0], make_rational(1, 1728));
  EXPECT_EQ(r.coefficients[1], make_rational(744, 1728));
  EXPECT_EQ(r.coefficients[2], make_rational(196884, 1728));
  EXPECT_EQ(r.pole_order, -264);
  EXPECT_LT(r.nabla_order, kN);
  ASSERT_EQ(r.candidates.size(), 2u);
  EXPECT_EQ(r.candidates[1].matched, 0);
  EXPECT_TRUE(r.candidates[1].first_mismatch.has_value());
}

TEST(Spotcheck, OneAndAHalfI) {
  const auto r = numeric_spotcheck({0.0, 1.5}, 1e-8);
  EXPECT_TRUE(r.ok);
  for (double x : r.residuals) EXPECT_LT(x, 1e-8);
  EXPECT_LT(r.curve_vs_oracle, 1e-8);
  EXPECT_LT(r.closing, 1e-20);
  EXPECT_NEAR(r.J_oracle.real(), 7.6109240063940, 1e-10);
}

TEST(Spotcheck, ThreeI) {
  const auto r = numeric_spotcheck({0.0, 3.0}, 1e-12);
  EXPECT_TRUE(r.ok);
  EXPECT_LT(r.max_residual, 1e-12);
}

TEST(Spotcheck, OffAxisPoint) {
  const auto r = numeric_spotcheck({0.3, 1.2}, 1e-8);
  EXPECT_TRUE(r.ok) << r.max_residual;
}

TEST(Spotcheck, LemniscaticPoint) {
  const auto j = j_oracle({0.0, 1.0});
  EXPECT_NEAR(j.real(), 1.0, 1e-15);
  EXPECT_NEAR(j.imag(), 0.0, 1e-15);
  EXPECT_THROW(numeric_spotcheck({0.0, -1.0}, 1e-8), MathError);
}
