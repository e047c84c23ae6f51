#pragma once

// Small dense matrices over a field, and exact linear solving.

#include <array>
#include <optional>
#include <vector>

#include "klein11/errors.hpp"
#include "klein11/exact/cyclotomic.hpp"

namespace klein11 {

template <class T>
using Matrix5 = std::array<std::array<T, 5>, 5>;

template <class T>
Matrix5<T> identity5() {
  Matrix5<T> m{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m[i][j] = T(i == j ? 1 : 0);
  return m;
}

template <class T>
Matrix5<T> operator*(const Matrix5<T>& a, const Matrix5<T>& b) {
  Matrix5<T> r{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      T acc(0);
      for (int k = 0; k < 5; ++k) {
        if (is_zero(a[i][k]) || is_zero(b[k][j])) continue;
        acc += a[i][k] * b[k][j];
      }
      r[i][j] = acc;
    }
  return r;
}

template <class T>
Matrix5<T> scaled(Matrix5<T> m, const T& s) {
  for (auto& row : m)
    for (auto& x : row) x = x * s;
  return m;
}

// Gaussian elimination on a dense matrix with rows of equal length.
template <class T>
struct Elimination {
  std::vector<std::vector<T>> rows;
  std::vector<int> pivot_cols;
  int swaps = 0;
};

template <class T>
Elimination<T> row_reduce(std::vector<std::vector<T>> rows, std::size_t ncols) {
  Elimination<T> el;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == T(0)) ++p;
    if (p == rows.size()) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      ++el.swaps;
    }
    const T inv = T(1) / rows[r][c];
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == T(0)) continue;
      const T f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j)
        if (!(rows[r][j] == T(0))) rows[i][j] -= f * rows[r][j];
    }
    el.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  el.rows = std::move(rows);
  return el;
}

template <class T>
std::size_t rank(const std::vector<std::vector<T>>& a) {
  if (a.empty()) return 0;
  return row_reduce(a, a[0].size()).pivot_cols.size();
}

struct SolveFailure {
  std::size_t rank = 0;
  std::size_t kernel_dimension = 0;
  bool inconsistent = false;
};

// Solves A x = b exactly; requires a unique solution.
template <class T>
std::vector<T> solve_unique(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
                            SolveFailure* failure = nullptr) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  std::vector<std::vector<T>> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto el = row_reduce(aug, n + 1);
  SolveFailure f;
  f.rank = 0;
  for (int c : el.pivot_cols) {
    if (c == static_cast<int>(n)) f.inconsistent = true;
    else ++f.rank;
  }
  f.kernel_dimension = n - f.rank;
  if (f.inconsistent || f.kernel_dimension != 0) {
    if (failure) *failure = f;
    if (f.inconsistent) throw MathError("linear system is inconsistent");
    throw MathError("linear system is rank deficient, kernel dimension " + std::to_string(f.kernel_dimension));
  }
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = el.rows[i][n];
  return x;
}

template <class T>
T determinant(const Matrix5<T>& m) {
  std::vector<std::vector<T>> rows(5, std::vector<T>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) rows[i][j] = m[i][j];
  // plain elimination; det is the product of pivots
  T det(1);
  for (int c = 0; c < 5; ++c) {
    int p = c;
    while (p < 5 && rows[p][c] == T(0)) ++p;
    if (p == 5) return T(0);
    if (p != c) {
      std::swap(rows[p], rows[c]);
      det = -det;
    }
    det = det * rows[c][c];
    const T inv = T(1) / rows[c][c];
    for (int i = c + 1; i < 5; ++i) {
      if (rows[i][c] == T(0)) continue;
      const T f = rows[i][c] * inv;
      for (int j = c; j < 5; ++j) rows[i][j] -= f * rows[c][j];
    }
  }
  return det;
}

template <class T>
Matrix5<T> inverse(const Matrix5<T>& m) {
  std::vector<std::vector<T>> rows(5, std::vector<T>(10, T(0)));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) rows[i][j] = m[i][j];
    rows[i][5 + i] = T(1);
  }
  const auto el = row_reduce(rows, 5);
  if (el.pivot_cols.size() != 5) throw DivisionByZero("singular matrix");
  Matrix5<T> r{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r[i][j] = el.rows[i][5 + j];
  return r;
}

}  // namespace klein11
