#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "klein11/exact/complex_mp.hpp"
#include "klein11/exact/cyclotomic.hpp"
#include "klein11/exact/serialize.hpp"

using namespace klein11;

namespace {

Cyclotomic rho(long k) { return Cyclotomic::rho_power(k); }

Cyclotomic random_element(std::mt19937_64& rng, int height = 9) {
  std::uniform_int_distribution<int> num(-height, height), den(1, 4);
  std::array<Rational, 10> c;
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return Cyclotomic::from_coefficients(c);
}

Cyclotomic random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    auto a = random_element(rng);
    if (!a.is_zero()) return a;
  }
}

}  // namespace

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(inverse(Rational(0)), DivisionByZero);
}

TEST(Rational, ExactRoots) {
  EXPECT_EQ(*exact_root(Rational(make_rational(-27, 8)), 3), make_rational(-3, 2));
  EXPECT_FALSE(exact_root(Rational(2), 2).has_value());
  EXPECT_FALSE(exact_root(Integer(-4), 2).has_value());
}

TEST(Cyclotomic, RhoTimesRhoTenIsOne) { EXPECT_EQ(rho(1) * rho(10), Cyclotomic(1)); }

TEST(Cyclotomic, MinimalPolynomialRelation) {
  Cyclotomic s;
  for (int k = 0; k <= 10; ++k) s += rho(k);
  EXPECT_TRUE(s.is_zero());
}

TEST(Cyclotomic, GaussPeriodProduct) {
  // Oracle: expand the 25 products as exponents mod 11 and count.
  std::array<int, 11> counts{};
  for (int a : {1, 3, 4, 5, 9})
    for (int b : {2, 6, 7, 8, 10}) ++counts[(a + b) % 11];
  Cyclotomic brute;
  for (int e = 0; e < 11; ++e) brute += Cyclotomic(counts[e]) * rho(e);

  const Cyclotomic eta0 = rho(1) + rho(3) + rho(4) + rho(5) + rho(9);
  const Cyclotomic eta1 = rho(2) + rho(6) + rho(7) + rho(8) + rho(10);
  EXPECT_EQ(eta0 * eta1, brute);
  EXPECT_EQ(eta0 * eta1, Cyclotomic(3));
}

TEST(Cyclotomic, SqrtMinus11) {
  const Cyclotomic g = sqrt_m11();
  EXPECT_EQ(g * g, Cyclotomic(-11));

  const auto z = to_complex(g);
  EXPECT_NEAR(z.real(), 0.0, 1e-12);
  EXPECT_NEAR(z.imag(), std::sqrt(11.0), 1e-12);

  const Cyclotomic w = (Cyclotomic(-1) + g) / Cyclotomic(2);
  EXPECT_TRUE((w * w + w + Cyclotomic(3)).is_zero());
}

TEST(Cyclotomic, GaloisConjugation) {
  EXPECT_EQ(galois_conj(rho(1), 2), rho(2));
  EXPECT_EQ(galois_conj(sqrt_m11(), 2), -sqrt_m11());
  EXPECT_EQ(galois_conj(sqrt_m11(), 3), sqrt_m11());
  EXPECT_THROW(galois_conj(rho(1), 22), MathError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_element(rng);
    EXPECT_EQ(galois_conj(galois_conj(a, 2), 6), a);
  }
}

TEST(Cyclotomic, DivisionByZeroThrows) {
  EXPECT_THROW(Cyclotomic(1) / Cyclotomic(), DivisionByZero);
}

TEST(Cyclotomic, InverseIsCanonical) {
  EXPECT_EQ(Cyclotomic(-22).inverse(), Cyclotomic(make_rational(-1, 22)));
  EXPECT_EQ(Cyclotomic(-22).inverse().denominator(), 22);
  const Cyclotomic x = Cyclotomic(99) - Cyclotomic(22) * sqrt_m11();
  EXPECT_EQ(x.inverse().inverse(), x);
  EXPECT_EQ(pretty(Cyclotomic(1) / x.inverse()), "99 - 22*sqrt(-11)");
}

TEST(Cyclotomic, QuadraticFormatting) {
  const Cyclotomic g = sqrt_m11();
  EXPECT_EQ(pretty((Cyclotomic(7) - g) / Cyclotomic(2)), "7/2 - 1/2*sqrt(-11)");
  EXPECT_EQ(pretty(Cyclotomic(88) * g), "88*sqrt(-11)");
  EXPECT_EQ(pretty(Cyclotomic(-22)), "-22");
  EXPECT_FALSE(as_quadratic(rho(1)).has_value());
}

TEST(ComplexEval, Basics) {
  const auto one = complex_eval(Cyclotomic(1), 40);
  EXPECT_EQ(one.re, 1);
  EXPECT_EQ(one.im, 0);

  const auto r = complex_eval(rho(1), 40);
  EXPECT_NEAR(static_cast<double>(r.re), std::cos(2 * M_PI / 11), 1e-12);
  EXPECT_NEAR(static_cast<double>(r.im), std::sin(2 * M_PI / 11), 1e-12);

  const auto g = complex_eval(sqrt_m11(), 40);
  EXPECT_NEAR(static_cast<double>(g.norm()), 11.0, 1e-10);
  // 40 digits really are carried.
  EXPECT_LT(abs(g.norm() - 11), BigFloat("1e-35"));
}

// Field axioms, >= 1000 random cases each.
TEST(CyclotomicProperty, FieldAxioms) {
  std::mt19937_64 rng(20260);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a - a, Cyclotomic());
  }
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_nonzero(rng);
    ASSERT_EQ(a * a.inverse(), Cyclotomic(1));
    ASSERT_EQ(a.inverse().inverse(), a);
    ASSERT_GT(sgn(a.inverse().denominator()), 0);
    ASSERT_NE(a.norm(), 0);
  }
}

TEST(CyclotomicProperty, SerializeRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(rng);
    const std::string s = a.to_string();
    ASSERT_EQ(Cyclotomic::parse(s).to_string(), s);
    const json j = to_json_value(a);
    ASSERT_EQ(cyclotomic_from_json(json::parse(j.dump())), a);
  }
}

TEST(CyclotomicProperty, GaloisIsRingHomomorphism) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(rng), b = random_element(rng);
    const long k = 1 + static_cast<long>(rng() % 10);
    ASSERT_EQ(galois_conj(a + b, k), galois_conj(a, k) + galois_conj(b, k));
    ASSERT_EQ(galois_conj(a * b, k), galois_conj(a, k) * galois_conj(b, k));
  }
}

TEST(CyclotomicProperty, ComplexEvalIsHomomorphism) {
  std::mt19937_64 rng(8);
  const auto rp = rho_powers<double>();
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(rng, 5), b = random_element(rng, 5);
    const auto za = evaluate(a, rp), zb = evaluate(b, rp);
    const auto prod = evaluate(a * b, rp), sum = evaluate(a + b, rp);
    ASSERT_LT((prod - za * zb).abs(), 1e-10);
    ASSERT_LT((sum - za - zb).abs(), 1e-10);
  }
}
