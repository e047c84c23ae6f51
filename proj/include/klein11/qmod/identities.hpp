#pragma once

// The exact u-series identities: the Brioschi relation among the A_k, the
// degree-12 multiplier equation and its roots, the curve y(u) on H = 0, and
// J = -C^3 / (1728 nabla^11) against the classical expansion.

#include <array>
#include <string>
#include <vector>

#include "klein11/algebra/substitute.hpp"
#include "klein11/klein/forms.hpp"
#include "klein11/qmod/modular.hpp"
#include "klein11/qmod/theta.hpp"

namespace klein11 {

namespace qmod_detail {

template <class T>
std::string coefficient_text(const T& c) {
  if constexpr (std::is_same_v<T, Rational>)
    return to_string(c);
  else
    return pretty(c);
}

// Vanishing order of s, insisting that s is known to at least N.
template <class T>
long require_vanishing(const LaurentSeries<T>& s, long N, const std::string& what) {
  if (s.precision() < N)
    throw TruncationError(what + ": known only below u^" + std::to_string(s.precision()), s.precision());
  const auto t = s.truncated(N);
  if (!t.is_known_zero()) {
    const long e = *t.valuation();
    throw VerificationFailure(what + ": coefficient " + coefficient_text(t.coefficient(e)) + " at u^" +
                                  std::to_string(e),
                              e);
  }
  return s.order();
}

}  // namespace qmod_detail

// A_0^5 + A_1 A_4 A_5 A_9 A_3
inline URSeries brioschi_residual(const ThetaFamily& t) {
  return t[0].pow(5) + t[1] * t[4] * t[5] * t[9] * t[3];
}

struct BrioschiReport {
  long order = 0;
  long residual_order = 0;  // at least order on success
  long leading_exponent = 0;  // common leading exponent of both terms
};

inline BrioschiReport verify_brioschi(const ThetaFamily& t, long N) {
  BrioschiReport r;
  r.order = N;
  r.leading_exponent = t[0].pow(5).order();
  r.residual_order = qmod_detail::require_vanishing(brioschi_residual(t).s, N, "A0^5 + A1 A4 A5 A9 A3");
  return r;
}

inline BrioschiReport verify_brioschi(long N) { return verify_brioschi(build_theta(N), N); }

// ---- multiplier equation ----

struct MultiplierRoots {
  long order = 0;
  std::array<USeries, 12> from_theta;  // z_inf, z_0, ..., z_10
  std::array<USeries, 12> from_eta;
};

inline std::string root_name(int i) { return i == 0 ? std::string("z_inf") : "z_" + std::to_string(i - 1); }

inline MultiplierRoots multiplier_roots(const ThetaFamily& t, long N) {
  MultiplierRoots m;
  m.order = N;
  std::array<USeries, 6> A;
  for (int s = 0; s < 6; ++s) A[s] = to_cyclotomic(t.A[s]);
  const USeries& a0 = A[0];
  m.from_theta[0] = a0.pow(2).scaled(Cyclotomic(-11));
  m.from_eta[0] = {euler_product<Cyclotomic>(22 * kUPerQ, 2, 242, N).scaled(Cyclotomic(-11)), Rational(1)};
  for (int v = 0; v < 11; ++v) {
    USeries sum = a0;
    for (int s = 1; s < 6; ++s) sum += A[s].scaled(Cyclotomic::rho_power(kThetaIndices[s] * v));
    m.from_theta[v + 1] = sum.pow(2);
    const auto twist = [v](long l) { return Cyclotomic::rho_power(2 * v * l); };
    m.from_eta[v + 1] = {euler_product<Cyclotomic>(24, 2, 2, N, twist).scaled(Cyclotomic::rho_power(2 * v)),
                         Rational(1)};
  }
  return m;
}

// The degree-12 polynomial at z, with every radical of Delta an exact series.
inline USeries multiplier_equation(const USeries& z, const ModularScalars& ms) {
  const auto c = [](long k) { return Cyclotomic(k); };
  const USeries E4 = to_cyclotomic(ms.E4), E6 = to_cyclotomic(ms.E6), D = to_cyclotomic(ms.Delta);
  auto R = [&](int k) { return to_cyclotomic(ms.root(k)); };
  const USeries z2 = z.pow(2), z3 = z2 * z, z4 = z2 * z2, z6 = z3 * z3;
  return z6 * z6 - (R(2) * z6).scaled(c(990)) + (E4 * R(3) * z4).scaled(c(440)) -
         (E6 * R(4) * z3).scaled(c(165)) + (E4.pow(2) * R(6) * z2).scaled(c(22)) - E4 * E6 * R(12) * z -
         D.scaled(c(11));
}

struct MultiplierReport {
  long order = 0;
  std::array<long, 12> squared_roots{};   // agreement order of theta and eta forms
  std::array<long, 12> degree12_equation{};  // residual order of each root
  long trace_order = 0;
};

inline MultiplierReport verify_multiplier(long N) {
  MultiplierReport r;
  r.order = N;
  const auto t = build_theta(N);
  const auto ms = build_modular_scalars(N);
  const auto roots = multiplier_roots(t, N);
  USeries trace = roots.from_eta[0];
  for (int i = 0; i < 12; ++i) {
    const std::string name = root_name(i);
    r.squared_roots[i] = qmod_detail::require_vanishing((roots.from_theta[i] - roots.from_eta[i]).s, N,
                                                     "squared theta form of " + name);
    r.degree12_equation[i] =
        qmod_detail::require_vanishing(multiplier_equation(roots.from_eta[i], ms).s, N, "equation at " + name);
    if (i) trace += roots.from_eta[i];
  }
  r.trace_order = qmod_detail::require_vanishing(trace.s, N, "sum of the twelve roots");
  return r;
}

// ---- the curve y(u) ----

struct YCurve {
  long order = 0;        // relative precision requested
  long theta_order = 0;  // order the thetas were built to
  long shift = 0;        // common u-power removed
  std::array<URSeries, 5> y;  // storage order y1, y4, y5, y9, y3
  std::array<long, 5> leading{};  // leading exponents after the shift
  long closing_order = 0;  // y4 A1 + A0 y5
  long cycle_order = 0;    // (-A0)^5 / (A1 A4 A5 A9 A3) - 1

  SeriesTuple<Rational> series() const {
    SeriesTuple<Rational> s;
    for (int i = 0; i < 5; ++i) s[i] = y[i].s;
    return s;
  }
};

// The chain y1 = 1, y1/y4 = -A0/A3, y3/y1 = -A0/A9, y9/y3 = -A0/A5,
// y5/y9 = -A0/A4 multiplied through by A0 A4 A5 A9.  The remaining ratio
// y4/y5 = -A0/A1 closes the cycle exactly when the Brioschi relation holds.
inline std::array<URSeries, 5> y_from_theta(const ThetaFamily& t) {
  return {t[0] * t[4] * t[5] * t[9], -(t[3] * t[4] * t[5] * t[9]), -t[0].pow(4), t[0].pow(3) * t[4],
          -(t[0].pow(2) * t[4] * t[5])};
}

inline YCurve reconstruct_y(long N) {
  if (N < 1) throw MathError("curve order must be at least 1");
  // the shift removes about 460; grow until the relative precision suffices
  for (long extra = 6 * 96;; extra += 2 * 96) {
    YCurve c;
    c.order = N;
    c.theta_order = N + extra;
    const auto t = build_theta(c.theta_order);
    auto y = y_from_theta(t);
    long v = LONG_MAX, prec = LONG_MAX;
    for (const auto& s : y) v = std::min(v, s.order());
    for (const auto& s : y) prec = std::min(prec, s.precision() - v);
    if (prec < N) continue;
    c.shift = v;
    for (int i = 0; i < 5; ++i) {
      c.y[i] = {y[i].s.shifted(-v).truncated(N), y[i].weight};
      c.leading[i] = c.y[i].order();
    }
    c.closing_order = qmod_detail::require_vanishing((y[1] * t[1] + t[0] * y[2]).s.shifted(-v - 1), N,
                                                     "closing ratio y4/y5 = -A0/A1");
    const auto prod = t[1] * t[4] * t[5] * t[9] * t[3];
    const auto cycle = (-t[0].pow(5)) / prod - URSeries::constant(Rational(1));
    if (cycle.s.precision() < N) continue;
    c.cycle_order = qmod_detail::require_vanishing(cycle.s, N, "cycle product of the five ratios");
    return c;
  }
}

struct HikReport {
  long order = 0;
  std::array<long, 15> residual_orders{};
};

inline HikReport verify_hik(const YCurve& c, const NamedForms& nf) {
  HikReport r;
  r.order = c.order;
  const auto ys = c.series();
  for (std::size_t i = 0; i < nf.H_ik.size(); ++i) {
    const auto& m = nf.H_ik[i];
    r.residual_orders[i] = qmod_detail::require_vanishing(
        series_eval(m.value, ys), c.order,
        "H_" + std::to_string(m.row) + std::to_string(m.col) + "(y(u))");
  }
  return r;
}

// ---- J ----

struct JCandidate {
  std::string substitution;  // "x = q^2" or "x = q^(2/11)"
  long u_per_x = 0;
  long matched = 0;  // consecutive coefficients from the pole up
  std::optional<long> first_mismatch;  // u-exponent
};

struct JReport {
  long order = 0;          // requested
  long working_order = 0;  // relative precision actually used for y
  long precision = 0;      // J known below u^precision
  long nabla_order = 0;
  long pole_order = 0;
  std::vector<JCandidate> candidates;
  std::string winner;
  long matched = 0;
  std::vector<Rational> coefficients;  // of J under the winning substitution, from the pole
};

// -C^3 / (1728 nabla^11) along y(u).
inline LaurentSeries<Rational> j_along_curve(const YCurve& c, const NamedForms& nf) {
  const auto ys = c.series();
  const auto C = series_eval(to_rational(nf.Cform), ys);
  const auto n = series_eval(to_rational(nf.nabla), ys);
  return (C.pow(3) / n.pow(11)).scaled(make_rational(-1, 1728));
}

// Compares J(u) against the oracle j(x) read as x = u^m.
inline JCandidate match_j(const LaurentSeries<Rational>& J, long m, const std::string& name) {
  JCandidate cand;
  cand.substitution = name;
  cand.u_per_x = m;
  const long terms = J.precision() / m + 2;
  const auto oracle = classical_j_series(terms).dilated(m);
  const long start = std::min(J.order(), -m);
  for (long e = start; e < J.precision(); ++e) {
    const Rational want = e < oracle.precision() ? oracle.coefficient(e) : Rational(0);
    if (J.coefficient(e) != want) {
      cand.first_mismatch = e;
      break;
    }
    if (e % m == 0 && e >= -m) ++cand.matched;
  }
  return cand;
}

inline constexpr long kMinJCoefficients = 8;

inline JReport verify_J_identity(long N, const NamedForms& nf) {
  JReport r;
  r.order = N;
  // eight coefficients from the pole at u^-264 need J below u^(264 * 7)
  const long need = kUPerNome * (kMinJCoefficients - 1) + 1;
  for (long work = std::max(N, need + kUPerNome);; work += kUPerNome) {
    const auto c = reconstruct_y(work);
    const auto n = series_eval(to_rational(nf.nabla), c.series());
    if (n.is_known_zero()) throw MathError("nabla vanishes identically along y(u)");
    const auto J = j_along_curve(c, nf);
    if (J.precision() < need) continue;
    r.working_order = work;
    r.precision = J.precision();
    r.nabla_order = n.order();
    r.pole_order = J.order();
    r.candidates = {match_j(J, kUPerNome, "x = q^2"), match_j(J, 24, "x = q^(2/11)")};
    for (const auto& cand : r.candidates)
      if (cand.matched > r.matched) {
        r.matched = cand.matched;
        r.winner = cand.substitution;
        r.coefficients.clear();
        for (long e = -cand.u_per_x; e < J.precision(); e += cand.u_per_x) r.coefficients.push_back(J.coefficient(e));
      }
    if (r.matched < kMinJCoefficients) {
      std::string what = "J along y(u) matches neither substitution:";
      for (const auto& cand : r.candidates)
        what += " " + cand.substitution + " matched " + std::to_string(cand.matched) +
                (cand.first_mismatch ? " (first mismatch at u^" + std::to_string(*cand.first_mismatch) + ")" : "");
      what += "; J = " + J.truncated(std::min(J.precision(), J.order() + 3 * kUPerNome))
                             .to_string([](const Rational& q) { return to_string(q); }, "u");
      throw VerificationFailure(what, r.candidates.front().first_mismatch.value_or(J.precision()));
    }
    return r;
  }
}

}  // namespace klein11
