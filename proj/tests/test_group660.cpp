#include <gtest/gtest.h>

#include <random>

#include "klein11/group660/group_table.hpp"
#include "klein11/group660/invariants.hpp"

using namespace klein11;

namespace {

const GroupTable& G() { return GroupTable::instance(); }

bool proj_eq(const CycMatrix& a, const CycMatrix& b) { return ProjMatrix5(a) == ProjMatrix5(b); }
bool proj_id(const CycMatrix& a) { return ProjMatrix5(a).is_identity(); }

SparsePoly nabla() {
  return cyclic_orbit_sum(SparsePoly::monomial(mono({{1, 2}, {9, 1}}), Cyclotomic(1)));
}

}  // namespace

TEST(Generators, PrintedEntries) {
  // sqrt(-11) y1' = (rho^9 - rho^2) y1 + ... + (rho^1 - rho^10) y3
  const auto& t = generator_T();
  const Cyclotomic g = sqrt_m11();
  EXPECT_EQ(t[0][0] * g, rho(9) - rho(2));
  EXPECT_EQ(t[0][4] * g, rho(1) - rho(10));
  EXPECT_EQ(t[4][4] * g, rho(5) - rho(6));
  EXPECT_EQ(t[1][2] * g, rho(5) - rho(6));
  EXPECT_EQ(generator_S()[3][3], rho(9));
  EXPECT_EQ(generator_C()[4][0], Cyclotomic(1));
}

TEST(Generators, Relations) {
  EXPECT_TRUE(matrix_power(generator_S(), 11) == identity5<Cyclotomic>());
  EXPECT_TRUE(generator_T() * generator_T() == identity5<Cyclotomic>());
  EXPECT_TRUE(proj_eq(word_matrix("S6TS2TS6T"), generator_C()));
  EXPECT_TRUE(proj_id(word_matrix("U5")));
  EXPECT_TRUE(proj_id(word_matrix("V2")));
  EXPECT_TRUE(proj_id(word_matrix("UVUVUV")));
  EXPECT_TRUE(proj_eq(word_matrix("VC4VCVC"), generator_T()));
}

TEST(Words, LeftToRightReading) {
  // ST means S first: p -> p(S y) -> p(T S y)
  EXPECT_TRUE(word_matrix("ST") == generator_T() * generator_S());
  EXPECT_TRUE(word_matrix("S^-1") == inverse(generator_S()));
  EXPECT_TRUE(word_matrix("S-1TS") == letter_matrix('V'));
  const auto p = nabla() * SparsePoly::var(0);
  EXPECT_EQ(linear_substitute(linear_substitute(p, generator_T()), generator_S()),
            linear_substitute(p, word_matrix("ST")));
  EXPECT_THROW(parse_word("SX"), ParseError);
  EXPECT_THROW(parse_word("S-"), ParseError);
}

TEST(GroupTable, SixHundredSixtyElements) {
  EXPECT_EQ(G().size(), 660u);
  EXPECT_EQ(G()[G().identity_index()].word, "I");
}

TEST(GroupTable, OrderCensus) {
  // Oracle: PSL(2,11) has 55 involutions, 110 elements of order 3 and 6,
  // 264 of order 5 and 120 of order 11.
  const std::map<long, int> expected{{1, 1}, {2, 55}, {3, 110}, {5, 264}, {6, 110}, {11, 120}};
  EXPECT_EQ(G().order_census(), expected);
}

TEST(GroupTable, RandomClosure) {
  std::mt19937_64 rng(660);
  std::uniform_int_distribution<std::size_t> pick(0, 659);
  for (int k = 0; k < 10000; ++k) {
    const auto a = pick(rng), b = pick(rng);
    ASSERT_NO_THROW(G().compose(a, b));
  }
}

TEST(GroupTable, GeneratorTablesAgreeWithCompose) {
  const auto s = G().index_of_word("S"), t = G().index_of_word("T"), c = G().index_of_word("C");
  for (std::size_t i = 0; i < G().size(); ++i) {
    ASSERT_EQ(G().then(i, 0), G().compose(i, s));
    ASSERT_EQ(G().then(i, 1), G().compose(i, t));
    ASSERT_EQ(G().then(i, 2), G().compose(i, c));
  }
}

TEST(GroupTable, NormalFormWordsNameTheirMatrices) {
  for (std::size_t i = 0; i < G().size(); i += 7)
    ASSERT_TRUE(proj_eq(word_matrix(G()[i].word), G()[i].matrix.matrix())) << G()[i].word;
}

TEST(GroupTable, ClassCountsMatchOrders) {
  // Conjugacy classes by brute force; their sizes must add up per order.
  std::vector<int> cls(660, -1);
  std::vector<std::size_t> inv(660);
  for (std::size_t i = 0; i < 660; ++i) {
    inv[i] = *G().find(ProjMatrix5(inverse(G()[i].matrix.matrix())));
    ASSERT_EQ(G().compose(i, inv[i]), G().identity_index());
  }
  const std::array<std::size_t, 3> gens{G().index_of_word("S"), G().index_of_word("T"), G().index_of_word("C")};
  int next = 0;
  std::map<long, int> by_order;
  std::vector<int> sizes;
  for (std::size_t i = 0; i < 660; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<std::size_t> orbit{i};
    cls[i] = next;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (auto g : gens) {
        const auto h = G().compose(G().compose(inv[g], orbit[k]), g);
        if (cls[h] < 0) {
          cls[h] = next;
          orbit.push_back(h);
        }
      }
    by_order[G().order_of(i)] += static_cast<int>(orbit.size());
    sizes.push_back(static_cast<int>(orbit.size()));
    ++next;
  }
  EXPECT_EQ(next, 8);  // PSL(2,11) has eight classes
  EXPECT_EQ(by_order, G().order_census());
}

TEST(ProjectiveProperty, ScalarInvariance) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, 659);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int k = 0; k < 1000; ++k) {
    std::array<Rational, 10> co;
    for (auto& x : co) x = make_rational(c(rng), 1 + (c(rng) + 6) % 3);
    const auto lambda = Cyclotomic::from_coefficients(co);
    if (lambda.is_zero()) continue;
    const auto& m = G()[pick(rng)].matrix.matrix();
    ASSERT_TRUE(ProjMatrix5(scaled(m, lambda)) == ProjMatrix5(m));
    ASSERT_EQ(ProjMatrix5(scaled(m, lambda)).hash(), ProjMatrix5(m).hash());
  }
}

TEST(Subgroup, SixtyElements) {
  const auto sub = subgroup60();
  EXPECT_EQ(sub.size(), 60u);
  std::map<long, int> census;
  for (auto i : sub) ++census[G().order_of(i)];
  // icosahedral group
  EXPECT_EQ(census, (std::map<long, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}));
  const auto t = G().index_of_word("T");
  EXPECT_NE(std::find(sub.begin(), sub.end(), t), sub.end());
}

TEST(Invariance, NablaUnderGenerators) {
  const auto r = is_invariant(nabla(), {named("S"), named("T"), named("C")});
  EXPECT_TRUE(r.invariant);
}

TEST(Invariance, WitnessForNonInvariant) {
  const auto p = SparsePoly::monomial(mono({{1, 2}}), Cyclotomic(1));
  const auto r = is_invariant(p, {named("C"), named("S")});
  EXPECT_FALSE(r.invariant);
  EXPECT_EQ(r.witness, "C");
  EXPECT_FALSE(r.character.has_value());
  const auto s = is_invariant(p, {named("S")});
  ASSERT_TRUE(s.character.has_value());
  EXPECT_EQ(*s.character, rho(2));
}

TEST(Invariance, NablaUnderWholeGroup) {
  EXPECT_TRUE(is_invariant(nabla(), full_group_elements()).invariant);
}

TEST(Reynolds, CubicAverages) {
  // Oracle: plain average of linear_substitute over the 660 matrices.
  auto brute = [](const SparsePoly& m) {
    SparsePoly s;
    for (const auto& g : G().matrices()) s += linear_substitute(m, g, false);
    return s.scaled(Cyclotomic(make_rational(1, 660)));
  };
  // The pure cube is orthogonal to the only cubic invariant.
  const auto y13 = SparsePoly::monomial(mono({{1, 3}}), Cyclotomic(1));
  const auto r0 = reynolds(y13);
  EXPECT_TRUE(r0.zero);
  EXPECT_TRUE(brute(y13).is_zero());

  const auto y1y1y9 = SparsePoly::monomial(mono({{1, 2}, {9, 1}}), Cyclotomic(1));
  const auto r = reynolds(y1y1y9);
  EXPECT_EQ(r.average, brute(y1y1y9));
  EXPECT_TRUE(scalar_ratio(r.average, nabla()).has_value());
  EXPECT_EQ(r.normalized, nabla());
}

TEST(Reynolds, EleventhPowersGiveC) {
  const auto r = reynolds(SparsePoly::monomial(mono({{1, 11}}), Cyclotomic(1)));
  ASSERT_FALSE(r.zero);
  const auto& c = r.normalized;
  EXPECT_EQ(c.degree(), 11);
  for (int s : {1, 4, 5, 9, 3}) EXPECT_EQ(c.coefficient(mono({{s, 11}})), Cyclotomic(1));
  EXPECT_NO_THROW(to_rational(c));
  EXPECT_EQ(c.size(), 115u);
  EXPECT_EQ(r.scale, make_rational(1815, 31));
  EXPECT_TRUE(is_invariant(c, {named("S"), named("T"), named("C")}).invariant);
}

TEST(Reynolds, ZeroAverageIsReported) {
  const auto r = reynolds(SparsePoly::monomial(mono({{1, 1}}), Cyclotomic(1)));
  EXPECT_TRUE(r.zero);
  EXPECT_TRUE(r.average.is_zero());
  EXPECT_THROW(reynolds(nabla()), MathError);
}
