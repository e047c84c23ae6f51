#pragma once

// The 660 collineations, each named by its normal-form word
//   C^a S^b        (a in 0..4, b in 0..10)
//   C^a S^b T S^c  (a in 0..4, b, c in 0..10).

#include <map>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "klein11/group660/proj_matrix.hpp"

namespace klein11 {

struct GroupElement {
  std::string word;
  int alpha = 0;
  int beta = 0;
  int gamma = -1;  // -1 when the word has no T
  ProjMatrix5 matrix;
};

inline std::string normal_form_word(int alpha, int beta, int gamma) {
  std::string w;
  if (alpha) w += "C" + std::to_string(alpha);
  if (beta) w += "S" + std::to_string(beta);
  if (gamma >= 0) {
    w += "T";
    if (gamma) w += "S" + std::to_string(gamma);
  }
  return w.empty() ? "I" : w;
}

class GroupTable {
 public:
  static constexpr int kOrder = 660;

  // Builds and checks the table; throws if the normal form fails.
  GroupTable() {
    const CycMatrix s = generator_S(), t = generator_T(), c = generator_C();
    std::array<CycMatrix, 5> cpow;
    std::array<CycMatrix, 11> spow;
    cpow[0] = identity5<Cyclotomic>();
    spow[0] = identity5<Cyclotomic>();
    for (int k = 1; k < 5; ++k) cpow[k] = cpow[k - 1] * c;
    for (int k = 1; k < 11; ++k) spow[k] = spow[k - 1] * s;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 11; ++b) add({normal_form_word(a, b, -1), a, b, -1, ProjMatrix5(spow[b] * cpow[a])});
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 11; ++b) {
        const CycMatrix tsc = t * (spow[b] * cpow[a]);
        for (int g = 0; g < 11; ++g) add({normal_form_word(a, b, g), a, b, g, ProjMatrix5(spow[g] * tsc)});
      }
    if (elements_.size() != static_cast<std::size_t>(kOrder))
      throw MathError("normal-form words give " + std::to_string(elements_.size()) + " elements");
    // Closure under the generators suffices for closure of the whole set.
    const std::array<const CycMatrix*, 3> gens{&s, &t, &c};
    for (std::size_t g = 0; g < gens.size(); ++g) {
      right_[g].resize(kOrder);
      for (int i = 0; i < kOrder; ++i) {
        const auto idx = find(ProjMatrix5(*gens[g] * elements_[i].matrix.matrix()));
        if (!idx) throw MathError("not closed: " + elements_[i].word + " times generator " + "STC"[g]);
        right_[g][i] = *idx;
      }
    }
  }

  static const GroupTable& instance() {
    static const GroupTable table;
    return table;
  }

  std::size_t size() const { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }

  std::optional<std::size_t> find(const ProjMatrix5& m) const {
    const auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t identity_index() const { return *find(ProjMatrix5()); }

  // Index of (element i) followed by generator g in {0:S, 1:T, 2:C}.
  std::size_t then(std::size_t i, int g) const { return right_[g][i]; }

  // Index of the element named by a word.
  std::size_t index_of_word(std::string_view word) const {
    std::size_t cur = identity_index();
    for (const auto& [g, e] : parse_word(word)) {
      if (g == 'I') continue;
      const auto li = find(ProjMatrix5(letter_matrix(g)));
      if (!li) throw MathError(std::string("generator ") + g + " is not in the table");
      const long ord = order_of(*li);
      const long reps = ((e % ord) + ord) % ord;
      for (long k = 0; k < reps; ++k) cur = compose(cur, *li);
    }
    return cur;
  }

  // Index of (element a) followed by (element b).
  std::size_t compose(std::size_t a, std::size_t b) const {
    const auto idx = find(ProjMatrix5(elements_[b].matrix.matrix() * elements_[a].matrix.matrix()));
    if (!idx) throw MathError("product left the group");
    return *idx;
  }

  // Projective order.
  long order_of(std::size_t i) const {
    const auto& m = elements_[i].matrix;
    return projective_order(m, 700);
  }

  std::map<long, int> order_census() const {
    std::map<long, int> census;
    for (std::size_t i = 0; i < size(); ++i) ++census[order_of(i)];
    return census;
  }

  // All group elements as the exact matrix products of the printed S, T, C.
  std::vector<CycMatrix> matrices() const {
    std::vector<CycMatrix> out;
    for (const auto& e : elements_) out.push_back(e.matrix.matrix());
    return out;
  }

 private:
  void add(GroupElement e) {
    if (!index_.emplace(e.matrix, elements_.size()).second)
      throw MathError("duplicate element for word " + e.word);
    elements_.push_back(std::move(e));
  }

  std::vector<GroupElement> elements_;
  std::unordered_map<ProjMatrix5, std::size_t, ProjHash> index_;
  std::array<std::vector<std::size_t>, 3> right_;
};

// Closure of a set of generators inside the table (indices).
inline std::vector<std::size_t> generated_subgroup(const GroupTable& g, const std::vector<std::size_t>& gens) {
  std::vector<std::size_t> elems{g.identity_index()};
  std::vector<bool> seen(g.size(), false);
  seen[elems[0]] = true;
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (auto s : gens) {
      const auto h = g.compose(elems[k], s);
      if (!seen[h]) {
        seen[h] = true;
        elems.push_back(h);
      }
    }
  return elems;
}

// The icosahedral subgroup generated by C and V = S^-1 T S.
inline std::vector<std::size_t> subgroup60(const GroupTable& g = GroupTable::instance()) {
  auto sub = generated_subgroup(g, {g.index_of_word("C"), g.index_of_word("S-1TS")});
  if (sub.size() != 60) throw MathError("subgroup generated by C and V has " + std::to_string(sub.size()) + " elements");
  return sub;
}

}  // namespace klein11
