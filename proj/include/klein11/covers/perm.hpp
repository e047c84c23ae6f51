#pragma once

// Permutations of {1..N} in one-line notation.  Products are read left to
// right: (p * q)(i) = q(p(i)).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "klein11/errors.hpp"

namespace klein11 {

template <int N>
class Perm {
 public:
  static constexpr int kSize = N;

  Perm() { std::iota(img_.begin(), img_.end(), 0); }

  // 1-based images, as printed in one-line notation.
  static Perm from_images(const std::array<int, N>& one_based) {
    Perm p;
    std::array<bool, N> seen{};
    for (int i = 0; i < N; ++i) {
      const int v = one_based[i] - 1;
      if (v < 0 || v >= N || seen[v]) throw MathError("not a permutation");
      seen[v] = true;
      p.img_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  // Cycles given with 1-based points; unlisted points are fixed.
  static Perm from_cycles(const std::vector<std::vector<int>>& cycles) {
    Perm p;
    for (const auto& c : cycles)
      for (std::size_t k = 0; k < c.size(); ++k)
        p.img_[c[k] - 1] = static_cast<std::uint8_t>(c[(k + 1) % c.size()] - 1);
    std::array<int, N> check{};
    for (int i = 0; i < N; ++i) check[i] = p.img_[i] + 1;
    return from_images(check);
  }

  // 0-based image.
  int operator()(int i) const { return img_[i]; }
  int image(int one_based) const { return img_[one_based - 1] + 1; }

  std::array<int, N> images() const {
    std::array<int, N> out;
    for (int i = 0; i < N; ++i) out[i] = img_[i] + 1;
    return out;
  }

  Perm inverse() const {
    Perm r;
    for (int i = 0; i < N; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  Perm pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Perm r, b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      e >>= 1;
      b = b * b;
    }
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < N; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // Sorted descending.
  std::vector<int> cycle_type() const {
    std::vector<int> lens;
    std::array<bool, N> seen{};
    for (int i = 0; i < N; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  }

  long order() const {
    long o = 1;
    for (int len : cycle_type()) o = std::lcm(o, static_cast<long>(len));
    return o;
  }

  // Cycle notation with fixed points omitted, e.g. "(1,8)(2,5,4)".
  std::string cycle_string() const {
    std::string s;
    std::array<bool, N> seen{};
    for (int i = 0; i < N; ++i) {
      if (seen[i] || img_[i] == i) continue;
      s += '(';
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (j != i) s += ',';
        s += std::to_string(j + 1);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  std::string one_line() const {
    std::string s;
    for (int i = 0; i < N; ++i) {
      if (i) s += ',';
      s += std::to_string(img_[i] + 1);
    }
    return s;
  }

  friend Perm operator*(const Perm& p, const Perm& q) {
    Perm r;
    for (int i = 0; i < N; ++i) r.img_[i] = q.img_[p.img_[i]];
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.one_line(); }

 private:
  std::array<std::uint8_t, N> img_{};
};

using Perm11 = Perm<11>;

template <int N>
Perm<N> compose(const Perm<N>& p, const Perm<N>& q) {
  return p * q;
}

template <int N>
Perm<N> conjugate(const Perm<N>& p, const Perm<N>& by) {
  return by.inverse() * p * by;
}

}  // namespace klein11
