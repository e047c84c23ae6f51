#pragma once

// Both resolvents of degree eleven by undetermined coefficients along a
// branch chart, and the bridge between them.

#include <string>
#include <vector>

#include "klein11/algebra/upoly.hpp"
#include "klein11/klein/curve.hpp"

namespace klein11 {

using CSeries = LaurentSeries<Cyclotomic>;
using ZPoly = UPoly<Cyclotomic>;

struct ResolventZ {
  std::string chart;
  long order = 0;
  ZPoly P;  // C^3 / nabla^11 as a polynomial in z
  // J = k (z^2 + A z + B)(z^3 + a z^2 + b z + c)^3
  Cyclotomic A, B, a, b, c;
  // J - 1 = k (z^3 + A1 z^2 + B1 z + Gamma)(z^4 + alpha z^3 + beta z^2 + gamma z + delta)^2
  Cyclotomic A1, B1, Gamma, alpha, beta, gamma, delta;
  Cyclotomic kappa_poly;    // P - cubic * quartic^2, a constant
  Cyclotomic kappa_series;  // the same constant read off the series
  Rational k;
  long matched_orders = 0;  // series coefficients checked beyond those solved for
  ZPoly numerator_J() const;
  ZPoly numerator_J1() const;
};

struct ResolventXi {
  std::string chart;
  long order = 0;
  Cyclotomic alpha, beta, gamma, delta, epsilon, zeta;
  std::size_t equations = 0;
  long residual_order = 0;
  // With G = g2 / cbrt(Delta) and C / nabla^(11/3) = -12 G, the terms of the
  // xi-equation carrying C are xi4 * G xi^4, xi1 * G xi and xi0 * G^2.
  Cyclotomic xi4, xi1, xi0;
};

namespace resolvent_detail {

inline ZPoly zpoly(std::initializer_list<Cyclotomic> low_to_high) { return ZPoly(std::vector<Cyclotomic>(low_to_high)); }

inline Cyclotomic half(const Cyclotomic& x) { return x / Cyclotomic(2); }

// p(z) for a series z.
inline CSeries eval_series(const ZPoly& p, const CSeries& z) {
  CSeries acc = CSeries::monomial(Cyclotomic(0), 0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + CSeries::monomial(p.coefficient(i), 0);
  return acc;
}

// First nonzero coefficient of a series, if any.
inline void require_zero(const CSeries& r, const std::string& what) {
  if (!r.is_known_zero()) {
    const long e = *r.valuation();
    throw VerificationFailure(what + ": nonzero coefficient " + pretty(r.coefficient(e)) + " at order " +
                                  std::to_string(e),
                              e);
  }
}

}  // namespace resolvent_detail

inline ZPoly ResolventZ::numerator_J() const {
  using resolvent_detail::zpoly;
  return zpoly({B, A, Cyclotomic(1)}) * zpoly({c, b, a, Cyclotomic(1)}).pow(3);
}

inline ZPoly ResolventZ::numerator_J1() const {
  using resolvent_detail::zpoly;
  return zpoly({Gamma, B1, A1, Cyclotomic(1)}) * zpoly({delta, gamma, beta, alpha, Cyclotomic(1)}).pow(2);
}

// The three factors as printed, with r = sqrt(-11).
struct PrintedResolventZ {
  ZPoly quad, cubic, cubic2, quartic;
  Rational k;
};

inline PrintedResolventZ printed_resolvent_z() {
  using namespace resolvent_detail;
  const Cyclotomic r = sqrt_m11(), one(1);
  PrintedResolventZ p;
  p.quad = zpoly({Cyclotomic(5) - r, Cyclotomic(-3), one});
  p.cubic = zpoly({half(Cyclotomic(7) - r), Cyclotomic(-3) * half(one + r), one, one});
  p.cubic2 = zpoly({Cyclotomic(4) - Cyclotomic(6) * r, half(Cyclotomic(7) - Cyclotomic(5) * r), Cyclotomic(4), one});
  p.quartic = zpoly({Cyclotomic(-3) * half(Cyclotomic(5) + r), Cyclotomic(5) + r, Cyclotomic(3) * half(one - r),
                     Cyclotomic(-2), one});
  p.k = make_rational(-1, 1728);
  return p;
}

// quad * cubic^3 - cubic2 * quartic^2 as a polynomial in z.
inline ZPoly j_numerator_difference(const ZPoly& quad, const ZPoly& cubic, const ZPoly& cubic2, const ZPoly& quartic) {
  return quad * cubic.pow(3) - cubic2 * quartic.pow(2);
}

inline ResolventZ derive_resolvent_z(const NamedForms& nf, const Chart& chart) {
  using namespace resolvent_detail;
  if (chart.order < 30) throw MathError("resolvent derivation needs a chart of order at least 30");
  ResolventZ r;
  r.chart = chart.label;
  r.order = chart.order;
  const CSeries nab = series_eval(nf.nabla, chart.series);
  const CSeries z = series_eval(nf.f[0], chart.series) / nab;
  const CSeries q = series_eval(nf.Cform, chart.series).pow(3) / nab.pow(11);

  // q = P(z): peel off the pole orders from the top.
  const auto vz = z.valuation();
  if (!vz || *vz >= 0) throw MathError("z has no pole along chart " + chart.label);
  const auto vq = q.valuation();
  if (!vq || *vq % *vz != 0) throw MathError("C^3/nabla^11 has a pole order that is not a multiple of z's");
  const int deg = static_cast<int>(*vq / *vz);
  std::vector<CSeries> zp{CSeries::monomial(Cyclotomic(1), 0)};
  for (int d = 1; d <= deg; ++d) zp.push_back(zp.back() * z);
  std::vector<Cyclotomic> coeffs(deg + 1);
  CSeries rem = q;
  for (int d = deg; d >= 0; --d) {
    const long e = *vz * d;
    coeffs[d] = rem.coefficient(e) / zp[d].coefficient(e);
    if (!coeffs[d].is_zero()) rem = rem - zp[d].scaled(coeffs[d]);
  }
  require_zero(rem, "C^3/nabla^11 is not a polynomial in z");
  r.matched_orders = rem.precision() - 1;
  r.P = ZPoly(coeffs);
  if (!(r.P.leading() == Cyclotomic(1))) throw MathError("C^3/nabla^11 is not monic in z");

  // P = quad * cubic^3 with the cubic read off the repeated part.
  const ZPoly g1 = gcd(r.P, r.P.derivative());
  const ZPoly cubic = gcd(g1, g1.derivative());
  const auto [quad, qrem] = divmod(r.P, cubic.pow(3));
  if (cubic.degree() != 3 || quad.degree() != 2 || !qrem.is_zero())
    throw VerificationFailure("C^3/nabla^11 is not (quadratic)(cubic)^3 in z", cubic.degree());
  r.B = quad.coefficient(0);
  r.A = quad.coefficient(1);
  r.c = cubic.coefficient(0);
  r.b = cubic.coefficient(1);
  r.a = cubic.coefficient(2);

  // P - kappa = cubic2 * quartic^2; quartic^2 divides P' = cubic^2 (quad' cubic + 3 quad cubic').
  const ZPoly quartic = (quad.derivative() * cubic + ZPoly(Cyclotomic(3)) * quad * cubic.derivative()).monic();
  const auto [cubic2, krem] = divmod(r.P, quartic.pow(2));
  if (cubic2.degree() != 3 || krem.degree() > 0)
    throw VerificationFailure("P minus a constant is not (cubic)(quartic)^2 in z", krem.degree());
  r.kappa_poly = krem.coefficient(0);
  r.Gamma = cubic2.coefficient(0);
  r.B1 = cubic2.coefficient(1);
  r.A1 = cubic2.coefficient(2);
  r.delta = quartic.coefficient(0);
  r.gamma = quartic.coefficient(1);
  r.beta = quartic.coefficient(2);
  r.alpha = quartic.coefficient(3);

  // second determination: q - cubic2(z) quartic(z)^2 along the chart
  CSeries kap = q - eval_series(cubic2, z) * eval_series(quartic, z).pow(2);
  r.kappa_series = kap.coefficient(0);
  kap = kap - CSeries::monomial(r.kappa_series, 0);
  require_zero(kap, "C^3/nabla^11 - cubic * quartic^2 is not constant");
  if (!(r.kappa_series == r.kappa_poly))
    throw VerificationFailure("the two determinations of the constant disagree", 0);
  if (!r.kappa_poly.is_rational() || is_zero(r.kappa_poly.rational_part()))
    throw VerificationFailure("the constant is not a nonzero rational", 0);
  // J = 1 where P = 1/k
  r.k = inverse(r.kappa_poly.rational_part());
  return r;
}

inline ResolventXi derive_resolvent_xi(const NamedForms& nf, const Chart& chart, int v = 0) {
  ResolventXi r;
  r.chart = chart.label;
  r.order = chart.order;
  const CSeries phi = series_eval(nf.phi[v], chart.series);
  const CSeries nab = series_eval(nf.nabla, chart.series);
  const CSeries cf = series_eval(nf.Cform, chart.series);
  // phi^11 + alpha N^2 phi^8 + beta N^4 phi^5 + gamma N C phi^4 + delta N^6 phi^2 + eps N^3 C phi + zeta C^2
  const std::array<CSeries, 7> terms{phi.pow(11),        nab.pow(2) * phi.pow(8), nab.pow(4) * phi.pow(5),
                                     nab * cf * phi.pow(4), nab.pow(6) * phi.pow(2), nab.pow(3) * cf * phi,
                                     cf * cf};
  long prec = CSeries::kExact;
  long low = 0;
  for (const auto& t : terms) {
    prec = std::min(prec, t.precision());
    low = std::min(low, t.order());
  }
  std::vector<std::vector<Cyclotomic>> a;
  std::vector<Cyclotomic> rhs;
  for (long e = low; e < prec; ++e) {
    std::vector<Cyclotomic> row;
    for (int i = 1; i < 7; ++i) row.push_back(terms[i].coefficient(e));
    a.push_back(row);
    rhs.push_back(-terms[0].coefficient(e));
  }
  SolveFailure fail;
  std::vector<Cyclotomic> x;
  try {
    x = solve_unique(a, rhs, &fail);
  } catch (const MathError&) {
    throw VerificationFailure(fail.inconsistent ? "the degree-22 relation is inconsistent along the chart"
                                                : "the degree-22 relation is underdetermined along the chart",
                              prec);
  }
  r.equations = a.size();
  r.alpha = x[0];
  r.beta = x[1];
  r.gamma = x[2];
  r.delta = x[3];
  r.epsilon = x[4];
  r.zeta = x[5];
  CSeries sum = terms[0];
  for (int i = 1; i < 7; ++i) sum = sum + terms[i].scaled(x[i - 1]);
  resolvent_detail::require_zero(sum, "degree-22 relation");
  r.residual_order = sum.precision();
  const Cyclotomic m12(-12);
  r.xi4 = m12 * r.gamma;
  r.xi1 = m12 * r.epsilon;
  r.xi0 = m12 * m12 * r.zeta;
  return r;
}

inline std::array<Cyclotomic, 6> printed_xi_constants() {
  const Cyclotomic r = sqrt_m11();
  return {Cyclotomic(-22), Cyclotomic(11) * (Cyclotomic(9) - Cyclotomic(2) * r), Cyclotomic(11),
          Cyclotomic(88) * r, Cyclotomic(11) * (Cyclotomic(-3) + r) / Cyclotomic(2), Cyclotomic(-1)};
}

// With W = xi^3 and G^3 = J, the xi-equation reads
//   xi^2 P2(W) + xi G P1(W) + G^2 P0 = 0;
// the product over the three cube roots is
//   W^2 P2^3 + W J P1^3 + J^2 P0^3 - 3 W J P2 P1 P0,
// and substituting W = quad(z), J = k quad(z) cubic(z)^3 must give zero.
inline ZPoly xi_to_z_elimination(const ResolventXi& x, const ZPoly& quad, const ZPoly& cubic, const Rational& k) {
  const ZPoly& w = quad;
  const ZPoly p2 = w.pow(3) + ZPoly(x.alpha) * w.pow(2) + ZPoly(x.beta) * w + ZPoly(x.delta);
  const ZPoly p1 = ZPoly(x.xi4) * w + ZPoly(x.xi1);
  const ZPoly p0(x.xi0);
  const ZPoly j = ZPoly(Cyclotomic(k)) * quad * cubic.pow(3);
  return w.pow(2) * p2.pow(3) + w * j * p1.pow(3) + j.pow(2) * p0.pow(3) - ZPoly(Cyclotomic(3)) * w * j * p2 * p1 * p0;
}

struct BridgeReport {
  std::string chart;
  int v = 0;
  long homogeneous_residual = 0;    // order of phi^3 - (f^2 - 3 f N + (5 - r) N^2)
  long inhomogeneous_residual = 0;  // the same without N^2, as printed
  long xi_residual = 0;             // order of phi^3 / N^2 - (z^2 - 3 z + 5 - r)
  long order = 0;
  bool ok = false;
};

inline BridgeReport verify_bridge(const NamedForms& nf, const Chart& chart, int v = 0) {
  BridgeReport b;
  b.chart = chart.label;
  b.v = v;
  b.order = chart.order;
  // the constant follows the sign convention of the forms
  const Cyclotomic c = Cyclotomic(5) - (nf.conjugate ? -sqrt_m11() : sqrt_m11());
  const CSeries phi = series_eval(nf.phi[v], chart.series);
  const CSeries f = series_eval(nf.f[v], chart.series);
  const CSeries nab = series_eval(nf.nabla, chart.series);
  const CSeries lhs = phi.pow(3);
  const CSeries hom = lhs - (f * f - f * nab.scaled(Cyclotomic(3)) + (nab * nab).scaled(c));
  const CSeries inh = lhs - (f * f - f * nab.scaled(Cyclotomic(3)) + CSeries::monomial(c, 0));
  const CSeries z = f / nab;
  const CSeries xi = lhs / (nab * nab) - (z * z - z.scaled(Cyclotomic(3)) + CSeries::monomial(c, 0));
  b.homogeneous_residual = hom.order();
  b.inhomogeneous_residual = inh.order();
  b.xi_residual = xi.order();
  b.ok = hom.is_known_zero() && xi.is_known_zero() && !inh.is_known_zero();
  return b;
}

}  // namespace klein11
