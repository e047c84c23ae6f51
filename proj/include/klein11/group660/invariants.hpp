#pragma once

// Invariance tests and group averaging for polynomials under collineations.
// Matrices are used exactly as products of the printed generators, so a
// polynomial is invariant when p(M y) = p(y) on the nose.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein11/algebra/substitute.hpp"
#include "klein11/group660/group_table.hpp"

namespace klein11 {

struct NamedMatrix {
  std::string name;
  CycMatrix matrix;
};

inline NamedMatrix named(std::string word) {
  CycMatrix m = word_matrix(word);
  return {std::move(word), std::move(m)};
}

// p(M y) = chi * p(y), if such a scalar exists.
inline std::optional<Cyclotomic> relative_character(const SparsePoly& p, const CycMatrix& m) {
  if (p.is_zero()) return Cyclotomic(1);
  return scalar_ratio(linear_substitute(p, m), p);
}

struct InvarianceReport {
  bool invariant = true;
  std::string witness;                  // first failing element
  std::optional<Cyclotomic> character;  // its scalar, when p is only relatively invariant
};

inline InvarianceReport is_invariant(const SparsePoly& p, const std::vector<NamedMatrix>& elements) {
  InvarianceReport r;
  for (const auto& e : elements) {
    if (linear_substitute(p, e.matrix) == p) continue;
    r.invariant = false;
    r.witness = e.name;
    r.character = relative_character(p, e.matrix);
    break;
  }
  return r;
}

inline std::vector<NamedMatrix> full_group_elements(const GroupTable& g = GroupTable::instance()) {
  std::vector<NamedMatrix> out;
  for (const auto& e : g.elements()) out.push_back({e.word, e.matrix.matrix()});
  return out;
}

inline std::vector<NamedMatrix> elements_at(const GroupTable& g, const std::vector<std::size_t>& idx) {
  std::vector<NamedMatrix> out;
  for (auto i : idx) out.push_back({g[i].word, g[i].matrix.matrix()});
  return out;
}

struct ReynoldsResult {
  SparsePoly average;     // (1/|G|) sum_g p(M_g y)
  SparsePoly normalized;  // average rescaled to make the leading pure power monic
  Rational scale;         // normalized = scale * average, when scale is rational
  Cyclotomic scale_exact; // the same scale in general
  bool zero = false;
};

namespace detail {

// (sum_j c_j y_j)^d by the multinomial theorem.
inline SparsePoly linear_form_power(const std::array<Cyclotomic, 5>& c, int d) {
  std::array<std::vector<Cyclotomic>, 5> pw;
  for (int j = 0; j < 5; ++j) {
    pw[j].push_back(Cyclotomic(1));
    for (int k = 1; k <= d; ++k) pw[j].push_back(pw[j].back() * c[j]);
  }
  std::vector<Integer> fact(d + 1);
  fact[0] = 1;
  for (int k = 1; k <= d; ++k) fact[k] = fact[k - 1] * k;
  SparsePoly out;
  Exponents e{};
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == 4) {
      e[4] = static_cast<std::uint8_t>(left);
      Integer denom = 1;
      for (int i = 0; i < 5; ++i) denom *= fact[e[i]];
      Cyclotomic coef(Rational(fact[d] / denom));
      for (int i = 0; i < 5; ++i)
        if (e[i]) coef = coef * pw[i][e[i]];
      out.add_term(e, coef);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[j] = static_cast<std::uint8_t>(k);
      self(self, j + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace detail

// Group average of a monomial; a pure power y_i^d is averaged through its
// linear form L^d with L grouped by projective class of the row.
inline ReynoldsResult reynolds(const SparsePoly& monomial, const GroupTable& g = GroupTable::instance()) {
  if (monomial.size() != 1) throw MathError("reynolds expects a single monomial");
  const auto& [e, c0] = *monomial.terms().begin();
  const int d = total_degree(e);
  int nonzero = 0, var = -1;
  for (int i = 0; i < 5; ++i)
    if (e[i]) {
      ++nonzero;
      var = i;
    }
  SparsePoly sum;
  if (nonzero == 1) {
    // rows up to scale: canonical row -> sum of scale^d
    std::map<std::string, std::pair<std::array<Cyclotomic, 5>, Cyclotomic>> classes;
    for (const auto& el : g.elements()) {
      const auto& row = el.matrix.matrix()[var];
      Cyclotomic lead;
      for (const auto& x : row)
        if (!x.is_zero()) {
          lead = x;
          break;
        }
      std::array<Cyclotomic, 5> canon;
      const Cyclotomic inv = lead.inverse();
      std::string key;
      for (int j = 0; j < 5; ++j) {
        canon[j] = row[j] * inv;
        key += canon[j].to_string();
      }
      auto [it, fresh] = classes.try_emplace(key, canon, lead.pow(d));
      if (!fresh) it->second.second += lead.pow(d);
    }
    for (const auto& [key, entry] : classes) {
      if (entry.second.is_zero()) continue;
      sum += detail::linear_form_power(entry.first, d).scaled(entry.second);
    }
    sum = sum.scaled(c0);
  } else {
    for (const auto& el : g.elements()) sum += linear_substitute(monomial, el.matrix.matrix(), false);
  }
  ReynoldsResult r;
  r.average = sum.scaled(Cyclotomic(make_rational(1, static_cast<long>(g.size()))));
  if (r.average.is_zero()) {
    r.zero = true;
    return r;
  }
  // Make the coefficient of the averaged monomial's own pure power (or the
  // first term) equal to 1.
  Cyclotomic lead = r.average.coefficient(e);
  if (lead.is_zero()) lead = r.average.terms().begin()->second;
  r.scale_exact = lead.inverse();
  r.scale = r.scale_exact.is_rational() ? r.scale_exact.rational_part() : Rational(0);
  r.normalized = r.average.scaled(r.scale_exact);
  return r;
}

}  // namespace klein11
