#pragma once

// The collineations S, T and the cyclic permutation C acting on
// (y1, y4, y5, y9, y3), and 5x5 matrices up to scalars.
//
// Words are read left to right as successive operations.  A word
// g1 g2 ... gk therefore acts on polynomials as p -> p(M_gk ... M_g1 y).

#include <cctype>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "klein11/algebra/matrix.hpp"
#include "klein11/algebra/sparse_poly.hpp"
#include "klein11/exact/cyclotomic.hpp"

namespace klein11 {

using CycMatrix = Matrix5<Cyclotomic>;

inline Cyclotomic rho(long k) { return Cyclotomic::rho_power(k); }

// S multiplies y_k by rho^k.
inline const CycMatrix& generator_S() {
  static const CycMatrix m = [] {
    CycMatrix s{};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) s[i][j] = i == j ? rho(kVarSubscripts[i]) : Cyclotomic();
    return s;
  }();
  return m;
}

// sqrt(-11) * T is the symmetric array with entries rho^a - rho^b; each row
// is the previous one shifted left.
inline const CycMatrix& generator_T() {
  static const CycMatrix m = [] {
    const std::array<std::pair<int, int>, 5> base{{{9, 2}, {4, 7}, {3, 8}, {5, 6}, {1, 10}}};
    const Cyclotomic inv_g = sqrt_m11().inverse();
    CycMatrix t{};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const auto [a, b] = base[(i + j) % 5];
        t[i][j] = (rho(a) - rho(b)) * inv_g;
      }
    return t;
  }();
  return m;
}

// y1' = y4, y4' = y5, y5' = y9, y9' = y3, y3' = y1.
inline const CycMatrix& generator_C() {
  static const CycMatrix m = [] {
    CycMatrix c{};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) c[i][j] = Cyclotomic(j == (i + 1) % 5 ? 1 : 0);
    return c;
  }();
  return m;
}

inline CycMatrix matrix_power(const CycMatrix& m, long e) {
  if (e < 0) return matrix_power(inverse(m), -e);
  CycMatrix r = identity5<Cyclotomic>(), b = m;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

struct WordLetter {
  char generator;  // 'S', 'T', 'C', 'U', 'V' or 'I'
  long exponent;
};

// Parses words like "S6TS2TS6T", "S-1TS" or "C^2".
inline std::vector<WordLetter> parse_word(std::string_view w) {
  std::vector<WordLetter> out;
  std::size_t i = 0;
  while (i < w.size()) {
    const char g = w[i++];
    if (g == ' ' || g == '*') continue;
    if (std::string_view("STCUVI").find(g) == std::string_view::npos)
      throw ParseError("unknown generator '" + std::string(1, g) + "' in word");
    if (i < w.size() && w[i] == '^') ++i;
    std::size_t j = i;
    if (j < w.size() && w[j] == '-') ++j;
    while (j < w.size() && std::isdigit(static_cast<unsigned char>(w[j]))) ++j;
    long e = 1;
    if (j > i) {
      const std::string num(w.substr(i, j - i));
      if (num == "-") throw ParseError("dangling '-' in word");
      e = std::stol(num);
    }
    out.push_back({g, e});
    i = j;
  }
  return out;
}

inline CycMatrix letter_matrix(char g) {
  switch (g) {
    case 'S': return generator_S();
    case 'T': return generator_T();
    case 'C': return generator_C();
    case 'U': return generator_C() * generator_C();
    // V = S^-1 T S as a word
    case 'V': return generator_S() * generator_T() * inverse(generator_S());
    default: return identity5<Cyclotomic>();
  }
}

// Matrix of a word under the left-to-right reading.
inline CycMatrix word_matrix(std::string_view word) {
  CycMatrix m = identity5<Cyclotomic>();
  for (const auto& [g, e] : parse_word(word)) m = matrix_power(letter_matrix(g), e) * m;
  return m;
}

// A matrix considered up to a nonzero scalar.
class ProjMatrix5 {
 public:
  ProjMatrix5() : m_(identity5<Cyclotomic>()), canon_(m_) {}
  explicit ProjMatrix5(const CycMatrix& m) : m_(m), canon_(canonicalize(m)) {}

  const CycMatrix& matrix() const { return m_; }
  const CycMatrix& canonical() const { return canon_; }

  // Scale so the first nonzero entry in row-major order is 1.
  static CycMatrix canonicalize(const CycMatrix& m) {
    for (const auto& row : m)
      for (const auto& x : row)
        if (!x.is_zero()) {
          if (x == Cyclotomic(1)) return m;
          return scaled(m, x.inverse());
        }
    throw MathError("zero matrix is not projective");
  }

  bool is_identity() const { return canon_ == identity5<Cyclotomic>(); }

  friend ProjMatrix5 operator*(const ProjMatrix5& a, const ProjMatrix5& b) { return ProjMatrix5(a.m_ * b.m_); }
  friend bool operator==(const ProjMatrix5& a, const ProjMatrix5& b) { return a.canon_ == b.canon_; }

  std::size_t hash() const {
    std::size_t h = 0;
    for (const auto& row : canon_)
      for (const auto& x : row) h = h * 31 + x.hash();
    return h;
  }

 private:
  CycMatrix m_;
  CycMatrix canon_;
};

struct ProjHash {
  std::size_t operator()(const ProjMatrix5& m) const { return m.hash(); }
};

// Projective order; throws past `limit`.
inline long projective_order(const ProjMatrix5& m, long limit = 1000) {
  ProjMatrix5 p = m;
  for (long k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = ProjMatrix5(p.matrix() * m.matrix());
  }
  throw MathError("element order exceeds limit");
}

}  // namespace klein11
