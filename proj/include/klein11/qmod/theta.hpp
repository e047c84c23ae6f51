#pragma once

// The six theta series A_0, A_1, A_4, A_5, A_9, A_3 in u, each of weight 1/2
// with the factor mu stripped.  The closed formula for A_{k^2} is primary; the
// six printed bilateral sums are rebuilt alongside and compared term by term.

#include <array>
#include <string>
#include <vector>

#include "klein11/qmod/useries.hpp"

namespace klein11 {

// Storage order of the family.
inline constexpr std::array<int, 6> kThetaIndices{0, 1, 4, 5, 9, 3};

inline int theta_slot(int index) {
  for (int i = 0; i < 6; ++i)
    if (kThetaIndices[i] == index) return i;
  throw MathError("no theta series A_" + std::to_string(index));
}

struct ThetaDiscrepancy {
  int index;
  long exponent;  // in u
  Integer printed;
  Integer general;
};

struct ThetaFamily {
  long order = 0;
  std::array<URSeries, 6> A;  // by slot
  std::vector<ThetaDiscrepancy> discrepancies;

  const URSeries& operator[](int index) const { return A[theta_slot(index)]; }
};

namespace theta_detail {

// sum_h sign(h) q^(offset + a h^2 + b h + c) for q-exponents given as
// rationals; every exponent must land on the u-lattice.
struct QuadraticSum {
  Rational offset;
  long a, b;
  Rational c;
  bool odd_sign;  // (-1)^(h+1) instead of (-1)^h
};

inline std::map<long, Integer> bilateral(const std::vector<QuadraticSum>& parts, long order) {
  std::map<long, Integer> out;
  for (const auto& p : parts) {
    // beyond |h| = H the exponent only grows
    long H = 1;
    auto expo = [&](long h) { return q_to_u(p.offset + Rational(p.a * h * h + p.b * h) + p.c); };
    while (expo(H) < order || expo(-H) < order || H <= std::abs(p.b) / std::max(1L, p.a) + 1) ++H;
    for (long h = -H; h <= H; ++h) {
      const long e = expo(h);
      if (e >= order) continue;
      if (((e % 12) + 12) % 12 != 1) throw MathError("theta exponent " + std::to_string(e) + " off the 1 mod 12 class");
      const bool neg = ((h % 2 != 0) != p.odd_sign);
      out[e] += neg ? -1 : 1;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

inline URSeries to_series(const std::map<long, Integer>& terms, long order) {
  std::map<long, Rational> t;
  for (const auto& [e, c] : terms) t.emplace(e, Rational(c));
  return {LaurentSeries<Rational>::from_terms(t, order), make_rational(1, 2)};
}

// q^(1/132) [ sum_h (-1)^h q^(33h^2 - (11+12k)h + 2(k+1)(6k+5)/11)
//            + sum_h (-1)^h q^(33h^2 - (11-12k)h + 2(k-1)(6k-5)/11) ]  gives A_{k^2}, k = 1..5;
// A_0 = q^(121/132) sum_h (-1)^h q^(33h^2 - 11h).
inline std::vector<QuadraticSum> general_formula(int k) {
  const Rational u1 = make_rational(1, kUPerQ);
  if (k == 0) return {{make_rational(121, kUPerQ), 33, -11, Rational(0), false}};
  return {{u1, 33, -(11 + 12 * k), make_rational(2 * (k + 1) * (6 * k + 5), 11), false},
          {u1, 33, -(11 - 12 * k), make_rational(2 * (k - 1) * (6 * k - 5), 11), false}};
}

// The six lines as printed: offset in u, then (sign, b, c) for q^(33h^2 + bh + c).
inline std::vector<QuadraticSum> printed_formula(int index) {
  auto part = [](long off, bool odd, long b, long c) {
    return QuadraticSum{make_rational(off, kUPerQ), 33, b, Rational(c), odd};
  };
  switch (index) {
    case 0: return {part(121, true, 55, 22)};
    case 1: return {part(1, false, 1, 0), part(1, true, 13, 14)};
    case 4: return {part(37, false, 13, 1), part(37, true, 31, 7)};
    case 5: return {part(49, false, 37, 10), part(49, true, 7, 0)};
    case 9: return {part(97, true, 19, 2), part(97, false, 25, 4)};
    case 3: return {part(25, false, 49, 18), part(25, false, 61, 28)};
    default: throw MathError("no printed theta line for index " + std::to_string(index));
  }
}

}  // namespace theta_detail

// k with k^2 = index mod 11, k in 0..5.
inline int theta_k(int index) {
  for (int k = 0; k <= 5; ++k)
    if ((k * k) % 11 == index) return k;
  throw MathError("index is not a square mod 11");
}

inline std::map<long, Integer> printed_theta_terms(int index, long order) {
  return theta_detail::bilateral(theta_detail::printed_formula(index), order);
}

inline std::map<long, Integer> general_theta_terms(int index, long order) {
  return theta_detail::bilateral(theta_detail::general_formula(theta_k(index)), order);
}

// All six series known below u^N; disagreements with the printed lines are
// collected, and thrown when strict is set.
inline ThetaFamily build_theta(long N, bool strict = false) {
  if (N < 1) throw MathError("theta order must be at least 1");
  ThetaFamily t;
  t.order = N;
  for (int slot = 0; slot < 6; ++slot) {
    const int idx = kThetaIndices[slot];
    const auto gen = general_theta_terms(idx, N);
    const auto pr = printed_theta_terms(idx, N);
    std::map<long, std::pair<Integer, Integer>> cmp;
    for (const auto& [e, c] : gen) cmp[e].second = c;
    for (const auto& [e, c] : pr) cmp[e].first = c;
    for (const auto& [e, pc] : cmp)
      if (pc.first != pc.second) t.discrepancies.push_back({idx, e, pc.first, pc.second});
    t.A[slot] = theta_detail::to_series(gen, N);
  }
  if (strict && !t.discrepancies.empty()) {
    const auto& d = t.discrepancies.front();
    throw VerificationFailure("printed A_" + std::to_string(d.index) + " has " + d.printed.get_str() + " at u^" +
                                  std::to_string(d.exponent) + ", closed formula " + d.general.get_str(),
                              d.exponent);
  }
  return t;
}

// Leading exponent relative to A_1 and its coefficient read in ds = -u^24.
struct ThetaLead {
  int index;
  long relative_exponent;
  long ds_power;
  int ds_sign;
};

inline std::array<ThetaLead, 6> theta_leads(const ThetaFamily& t) {
  std::array<ThetaLead, 6> out{};
  const long base = t[1].s.order();
  for (int slot = 0; slot < 6; ++slot) {
    const auto& s = t.A[slot].s;
    const long rel = s.order() - base;
    if (rel % 24 != 0) throw MathError("leading exponent not a power of ds");
    const long m = rel / 24;
    const int sign = sgn(s.leading_coefficient()) * ((m % 2) ? -1 : 1);
    out[slot] = {kThetaIndices[slot], rel, m, sign};
  }
  return out;
}

}  // namespace klein11
