#pragma once

// Group order of a permutation group via a base and strong generating set
// (deterministic Schreier-Sims, Knuth's incremental form).

#include <cstdint>
#include <map>
#include <vector>

#include "klein11/covers/perm.hpp"

namespace klein11 {

template <int N>
class StabilizerChain {
 public:
  using P = Perm<N>;

  explicit StabilizerChain(const std::vector<P>& generators) {
    for (const auto& g : generators) extend(0, g);
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& lv : levels_) o *= lv.transversal.size();
    return o;
  }

  bool contains(const P& g) const {
    auto [h, lvl] = sift(g, 0);
    (void)lvl;
    return h.is_identity();
  }

  std::vector<int> base() const {
    std::vector<int> b;
    for (const auto& lv : levels_) b.push_back(lv.point + 1);
    return b;
  }

 private:
  struct Level {
    int point = 0;
    std::vector<P> gens;
    std::map<int, P> transversal;  // x -> element taking point to x
  };

  std::pair<P, std::size_t> sift(P g, std::size_t from) const {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      const auto it = levels_[j].transversal.find(g(levels_[j].point));
      if (it == levels_[j].transversal.end()) return {g, j};
      g = g * it->second.inverse();
    }
    return {g, levels_.size()};
  }

  void extend(std::size_t i, const P& g) {
    if (sift(g, i).first.is_identity()) return;
    if (i == levels_.size()) {
      Level lv;
      for (int p = 0; p < N; ++p)
        if (g(p) != p) {
          lv.point = p;
          break;
        }
      levels_.push_back(lv);
    }
    levels_[i].gens.push_back(g);
    rebuild_orbit(i);
    // Copy: recursion may append levels and invalidate references.
    const auto trans = levels_[i].transversal;
    const auto gens = levels_[i].gens;
    for (const auto& [x, ux] : trans)
      for (const auto& s : gens) {
        const P schreier = ux * s * trans.at(s(x)).inverse();
        if (!schreier.is_identity()) extend(i + 1, schreier);
      }
  }

  void rebuild_orbit(std::size_t i) {
    auto& lv = levels_[i];
    lv.transversal.clear();
    lv.transversal.emplace(lv.point, P());
    std::vector<int> queue{lv.point};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int x = queue[k];
      const P ux = lv.transversal.at(x);
      for (const auto& s : lv.gens) {
        const int y = s(x);
        if (lv.transversal.emplace(y, ux * s).second) queue.push_back(y);
      }
    }
  }

  std::vector<Level> levels_;
};

template <int N>
std::uint64_t group_order(const std::vector<Perm<N>>& generators) {
  return StabilizerChain<N>(generators).order();
}

// All elements, by closure; only sensible for small groups.
template <int N>
std::vector<Perm<N>> enumerate_group(const std::vector<Perm<N>>& generators, std::size_t limit = 100000) {
  std::vector<Perm<N>> elems{Perm<N>()};
  std::map<Perm<N>, bool> seen{{Perm<N>(), true}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& s : generators) {
      const auto h = elems[k] * s;
      if (seen.emplace(h, true).second) {
        elems.push_back(h);
        if (elems.size() > limit) throw MathError("group larger than enumeration limit");
      }
    }
  return elems;
}

}  // namespace klein11
