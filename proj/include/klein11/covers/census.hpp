#pragma once

// Eleven-sheeted covers of the J-sphere branched as
//   J = inf : one 11-cycle
//   J = 0   : cycle type 3,3,3,1,1
//   J = 1   : cycle type 2,2,2,2,1,1,1
// Loops around 0, 1, inf multiply to the identity: sigma_0 * sigma_1 * sigma_inf = 1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "klein11/covers/perm.hpp"
#include "klein11/covers/schreier_sims.hpp"
#include "klein11/exact/rational.hpp"

namespace klein11 {

inline const std::vector<int>& allowed_periods() {
  static const std::vector<int> p{1, 2, 3, 5, 6, 11};
  return p;
}

inline bool is_allowed_period(long order) {
  const auto& p = allowed_periods();
  return std::find(p.begin(), p.end(), order) != p.end();
}

inline Perm11 standard_eleven_cycle() {
  std::array<int, 11> img;
  for (int i = 0; i < 11; ++i) img[i] = (i + 1) % 11 + 1;
  return Perm11::from_images(img);
}

struct CriterionVerdict {
  bool accept = false;
  Perm11 ts3;
  std::vector<int> witness_cycle_type;
  long witness_order = 0;
};

// Examines T S^3 with T the loop around J = 1 and S the loop around J = inf.
inline CriterionVerdict period_criterion(const Perm11& sigma_1, const Perm11& sigma_inf) {
  CriterionVerdict v;
  v.ts3 = compose(sigma_1, sigma_inf.pow(3));
  v.witness_cycle_type = v.ts3.cycle_type();
  v.witness_order = v.ts3.order();
  v.accept = is_allowed_period(v.witness_order);
  return v;
}

struct CoverClass {
  Perm11 sigma_inf;
  Perm11 sigma_0;
  Perm11 sigma_1;
  bool canonical_rep = true;
  std::size_t orbit_size = 0;
};

inline Perm11 forced_sigma_0(const Perm11& sigma_1, const Perm11& sigma_inf) {
  return compose(sigma_1, sigma_inf).inverse();
}

// Riemann-Hurwitz genus of the cover with the given monodromy.
inline long cover_genus(const std::vector<Perm11>& loops) {
  long ramification = 0;
  for (const auto& p : loops) ramification += 11 - static_cast<long>(p.cycle_type().size());
  // 2 - 2g = 2*11 - ramification
  return (ramification - 2 * 11 + 2) / 2;
}

inline bool is_transitive(const std::vector<Perm11>& gens) {
  std::array<bool, 11> seen{};
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens)
      if (!seen[g(queue[k])]) {
        seen[g(queue[k])] = true;
        queue.push_back(g(queue[k]));
      }
  return queue.size() == 11;
}

// Every involution of cycle type 2^4 1^3, in a fixed order.
inline std::vector<Perm11> involutions_2_4() {
  std::vector<Perm11> out;
  std::vector<std::vector<int>> cur;
  std::array<bool, 11> used{};
  auto rec = [&](auto&& self, int start) -> void {
    if (cur.size() == 4) {
      out.push_back(Perm11::from_cycles(cur));
      return;
    }
    for (int a = start; a <= 11; ++a) {
      if (used[a - 1]) continue;
      used[a - 1] = true;
      for (int b = a + 1; b <= 11; ++b) {
        if (used[b - 1]) continue;
        used[b - 1] = true;
        cur.push_back({a, b});
        self(self, a + 1);
        cur.pop_back();
        used[b - 1] = false;
      }
      used[a - 1] = false;
    }
  };
  rec(rec, 1);
  return out;
}

struct CensusResult {
  std::size_t candidates = 0;
  std::size_t solutions = 0;
  std::vector<Perm11> raw;  // all sigma_1 that survive
  std::vector<CoverClass> classes;
};

inline CensusResult enumerate_covers_from(const std::vector<Perm11>& candidates) {
  const Perm11 s = standard_eleven_cycle();
  const std::vector<int> want0{3, 3, 3, 1, 1};
  CensusResult res;
  res.candidates = candidates.size();
  std::set<Perm11> solutions;
  for (const auto& t : candidates) {
    if (forced_sigma_0(t, s).cycle_type() != want0) continue;
    if (!is_transitive({t, s})) continue;
    solutions.insert(t);
    res.raw.push_back(t);
  }
  res.solutions = solutions.size();

  std::set<Perm11> done;
  std::vector<CoverClass> classes;
  for (const auto& t : solutions) {
    if (done.count(t)) continue;
    std::set<Perm11> orbit;
    for (int k = 0; k < 11; ++k) orbit.insert(conjugate(t, s.pow(k)));
    done.insert(orbit.begin(), orbit.end());
    CoverClass c;
    c.sigma_inf = s;
    c.sigma_1 = *orbit.begin();  // lexicographically least image array
    c.sigma_0 = forced_sigma_0(c.sigma_1, s);
    c.orbit_size = orbit.size();
    classes.push_back(c);
  }
  std::sort(classes.begin(), classes.end(),
            [](const CoverClass& a, const CoverClass& b) { return a.sigma_1 < b.sigma_1; });
  res.classes = std::move(classes);
  return res;
}

inline CensusResult enumerate_covers() { return enumerate_covers_from(involutions_2_4()); }

inline std::uint64_t monodromy_order(const CoverClass& c) {
  return group_order<11>({c.sigma_inf, c.sigma_1});
}

inline CriterionVerdict period_criterion(const CoverClass& c) {
  return period_criterion(c.sigma_1, c.sigma_inf);
}

// The class containing sigma_1 up to conjugation by powers of the 11-cycle.
inline std::optional<std::size_t> find_class(const std::vector<CoverClass>& classes, const Perm11& sigma_1) {
  const Perm11 s = standard_eleven_cycle();
  for (int k = 0; k < 11; ++k) {
    const Perm11 c = conjugate(sigma_1, s.pow(k));
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].sigma_1 == c) return i;
  }
  return std::nullopt;
}

// p from 2p - 2 = N(-2 + sum (v-1)/v); may be fractional or negative.
inline Rational regular_genus(long sheet_count, const std::vector<long>& ramification_orders) {
  Rational sum(-2);
  for (long v : ramification_orders) sum += make_rational(v - 1, v);
  return Rational(sheet_count) * sum / 2 + 1;
}

}  // namespace klein11
