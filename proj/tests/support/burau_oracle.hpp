#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <vector>

#include "lgkit/half_laurent.hpp"
#include "lgkit/link.hpp"

// Alexander polynomial from the reduced Burau representation, evaluated at a
// rational point: Delta(t) = det(I - B(beta)) (1 - t) / (1 - t^n). This is
// defined only up to a unit +-t^k, so comparisons go through
// matches_up_to_unit.
namespace burau {

using Matrix = std::vector<std::vector<mpq_class>>;

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline mpq_class determinant(Matrix a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const mpq_class f = a[r][col] / a[col][col];
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

// Reduced Burau matrix of sigma_i (1-based) on n strands, size n - 1.
inline Matrix generator(int n, int i, const mpq_class& t) {
  Matrix m = identity(static_cast<std::size_t>(n - 1));
  const auto k = static_cast<std::size_t>(i - 1);
  m[k][k] = -t;
  if (i > 1) m[k][k - 1] = t;
  if (i < n - 1) m[k][k + 1] = 1;
  return m;
}

inline Matrix inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const mpq_class p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline mpq_class alexander_at(const lgkit::BraidWord& b, const mpq_class& t) {
  const int n = b.strands;
  if (n == 1) return 1;
  Matrix m = identity(static_cast<std::size_t>(n - 1));
  for (const auto& l : b.letters) {
    Matrix g = generator(n, l.index, t);
    if (l.sign < 0) g = inverse(g);
    m = multiply(m, g);
  }
  Matrix a = identity(m.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= m[i][j];
  }
  mpq_class tn = 1;
  for (int k = 0; k < n; ++k) tn *= t;
  return determinant(a) * (1 - t) / (1 - tn);
}

// Finds e with x = +-base^e (|e| <= limit), returning sign * e encoded as a pair.
inline std::optional<std::pair<int, int>> unit_exponent(const mpq_class& x, const mpq_class& base, int limit = 200) {
  mpq_class p = 1;
  mpq_class pinv = 1;
  for (int e = 0; e <= limit; ++e) {
    if (x == p) return std::make_pair(1, e);
    if (x == -p) return std::make_pair(-1, e);
    if (x == pinv) return std::make_pair(1, -e);
    if (x == -pinv) return std::make_pair(-1, -e);
    p *= base;
    pinv /= base;
  }
  return std::nullopt;
}

// True when conway(s) and the Burau value at t = s^2 agree up to one common
// unit +-s^e at every sample point.
inline bool matches_up_to_unit(const lgkit::BraidWord& b, const lgkit::HalfLaurent& conway) {
  const std::vector<mpq_class> points = {2, 3, mpq_class(5, 3)};
  std::optional<std::pair<int, int>> unit;
  for (const auto& s : points) {
    const mpq_class lhs = conway.evaluate(s);
    const mpq_class rhs = alexander_at(b, s * s);
    if (lhs == 0 || rhs == 0) {
      if (lhs != rhs) return false;
      continue;
    }
    const auto u = unit_exponent(rhs / lhs, s);
    if (!u) return false;
    if (unit && *unit != *u) return false;
    unit = u;
  }
  return true;
}

}  // namespace burau
