#pragma once

// Determinants and minors of square matrices with polynomial entries.

#include <map>
#include <vector>

#include "klein11/algebra/sparse_poly.hpp"

namespace klein11 {

template <class T>
using PolyMatrix = std::vector<std::vector<Poly<T>>>;

namespace detail {

// Laplace expansion along rows `row..n-1` restricted to the columns in `mask`,
// memoised on (row, mask).
template <class T>
const Poly<T>& det_rec(const PolyMatrix<T>& m, std::size_t row, unsigned mask,
                       std::map<unsigned, Poly<T>>& memo) {
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  Poly<T> acc;
  if (row == m.size()) {
    acc = Poly<T>(T(1));
  } else {
    int sign = 1;
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (!(mask & (1u << c))) continue;
      if (!m[row][c].is_zero()) {
        const Poly<T> term = m[row][c] * det_rec(m, row + 1, mask & ~(1u << c), memo);
        if (sign > 0)
          acc += term;
        else
          acc -= term;
      }
      sign = -sign;
    }
  }
  return memo.emplace(mask, std::move(acc)).first->second;
}

}  // namespace detail

template <class T>
Poly<T> determinant(const PolyMatrix<T>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw MathError("determinant of a non-square matrix");
  if (m.empty()) return Poly<T>(T(1));
  std::map<unsigned, Poly<T>> memo;
  return detail::det_rec(m, 0, (1u << m.size()) - 1, memo);
}

template <class T>
Poly<T> det5(const PolyMatrix<T>& m) {
  if (m.size() != 5) throw MathError("det5 needs a 5x5 matrix");
  return determinant(m);
}

template <class T>
PolyMatrix<T> delete_row_col(const PolyMatrix<T>& m, std::size_t i, std::size_t k) {
  PolyMatrix<T> r;
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (a == i) continue;
    std::vector<Poly<T>> row;
    for (std::size_t b = 0; b < m.size(); ++b)
      if (b != k) row.push_back(m[a][b]);
    r.push_back(std::move(row));
  }
  return r;
}

template <class T>
struct Minor {
  int row;  // deleted row
  int col;  // deleted column
  Poly<T> value;
};

// The 15 first minors (i <= k) of a symmetric 5x5 matrix.
template <class T>
std::vector<Minor<T>> minors4(const PolyMatrix<T>& m) {
  if (m.size() != 5) throw MathError("minors4 needs a 5x5 matrix");
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k)
      if (!(m[i][k] == m[k][i])) throw MathError("minors4 needs a symmetric matrix");
  std::vector<Minor<T>> out;
  for (int i = 0; i < 5; ++i)
    for (int k = i; k < 5; ++k) out.push_back({i, k, determinant(delete_row_col(m, i, k))});
  return out;
}

// The matrix of second partials.
template <class T>
PolyMatrix<T> hessian_matrix(const Poly<T>& p) {
  PolyMatrix<T> h(5, std::vector<Poly<T>>(5));
  for (int i = 0; i < 5; ++i) {
    const Poly<T> di = p.derivative(i);
    for (int j = 0; j < 5; ++j) h[i][j] = di.derivative(j);
  }
  return h;
}

}  // namespace klein11
