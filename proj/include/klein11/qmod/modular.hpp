#pragma once

// E4 (for 12 g2), E6 (for 216 g3) and Delta as u-series, the radicals of
// Delta, and the classical J-expansion used as an independent oracle.

#include <array>
#include <map>

#include "klein11/qmod/useries.hpp"

namespace klein11 {

// One q-unit of the classical parameter exp(2 pi i omega) is u^264.
inline constexpr long kUPerNome = 2 * kUPerQ;

struct ModularScalars {
  long order = 0;
  URSeries E4, E6, Delta;
  URSeries eta2;  // u^22 prod (1 - u^(264 n))^2, the twelfth root of Delta
  std::map<int, URSeries> roots;  // Delta^(1/k) for k = 2, 3, 4, 6, 12

  const URSeries& root(int k) const {
    const auto it = roots.find(k);
    if (it == roots.end()) throw MathError("no radical of Delta of index " + std::to_string(k));
    return it->second;
  }
};

// sum sigma_k(n) x^n with x = u^step, below u^prec.
inline LaurentSeries<Rational> eisenstein_tail(long step, unsigned k, long prec) {
  std::map<long, Rational> t;
  for (long n = 1; n * step < prec; ++n) t.emplace(n * step, Rational(divisor_power_sum(n, k)));
  return LaurentSeries<Rational>::from_terms(t, prec);
}

inline ModularScalars build_modular_scalars(long N) {
  ModularScalars m;
  m.order = N;
  const auto one = LaurentSeries<Rational>::monomial(Rational(1), 0);
  m.E4 = {one + eisenstein_tail(kUPerNome, 3, N).scaled(Rational(240)), Rational(4)};
  m.E6 = {one - eisenstein_tail(kUPerNome, 5, N).scaled(Rational(504)), Rational(6)};
  m.eta2 = {euler_product<Rational>(kUPerNome, 2, 22, N), Rational(1)};
  // Delta has its own product, not a power of eta2, so the radicals below are
  // a check rather than a tautology.
  // Taken one nome further so that every radical is still known below u^N.
  const auto delta = euler_product<Rational>(kUPerNome, 24, kUPerNome, N + kUPerNome);
  m.Delta = {delta.truncated(N), Rational(12)};
  // principal branch: leading coefficient 1
  for (int k : {2, 3, 4, 6, 12}) m.roots[k] = {delta.root(k, Rational(1)).truncated(N), make_rational(12, k)};
  return m;
}

// (12 g2)^3 - (216 g3)^2 - 1728 Delta, which must vanish.
inline URSeries discriminant_residual(const ModularScalars& m) {
  return m.E4.pow(3) - m.E6.pow(2) - m.Delta.scaled(Rational(1728));
}

// J = E4^3 / (1728 Delta) in its natural parameter x, known below x^terms.
inline LaurentSeries<Rational> classical_j_series(long terms) {
  const long prec = terms + 1;
  const auto one = LaurentSeries<Rational>::monomial(Rational(1), 0);
  const auto e4 = one + eisenstein_tail(1, 3, prec + 1).scaled(Rational(240));
  const auto delta = euler_product<Rational>(1, 24, 1, prec + 1);
  return (e4.pow(3) / delta.scaled(Rational(1728))).truncated(terms);
}

}  // namespace klein11
