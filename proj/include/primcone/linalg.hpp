#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "primcone/numeric.hpp"

namespace primcone {

/// Dense exact linear algebra over a field (Rat or GaussRat).
template <typename K>
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<std::vector<K>> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r, std::vector<K>(c, K(0))) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.a[i][i] = K(1);
    return m;
  }

  std::vector<K>& operator[](size_t i) { return a[i]; }
  const std::vector<K>& operator[](size_t i) const { return a[i]; }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.cols == y.rows);
    Matrix z(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
      for (size_t k = 0; k < x.cols; ++k) {
        if (scalar_is_zero(x.a[i][k])) continue;
        for (size_t j = 0; j < y.cols; ++j) {
          if (scalar_is_zero(y.a[k][j])) continue;
          z.a[i][j] += x.a[i][k] * y.a[k][j];
        }
      }
    return z;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix z = x;
    for (size_t i = 0; i < x.rows; ++i)
      for (size_t j = 0; j < x.cols; ++j) z.a[i][j] += y.a[i][j];
    return z;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix z = x;
    for (size_t i = 0; i < x.rows; ++i)
      for (size_t j = 0; j < x.cols; ++j) z.a[i][j] -= y.a[i][j];
    return z;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    assert(v.size() == cols);
    std::vector<K> w(rows, K(0));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        if (!scalar_is_zero(a[i][j])) w[i] += a[i][j] * v[j];
    return w;
  }
};

template <typename K>
size_t rank(Matrix<K> m) {
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t piv = r;
    while (piv < m.rows && scalar_is_zero(m.a[piv][c])) ++piv;
    if (piv == m.rows) continue;
    std::swap(m.a[piv], m.a[r]);
    for (size_t i = r + 1; i < m.rows; ++i) {
      if (scalar_is_zero(m.a[i][c])) continue;
      K f = m.a[i][c] / m.a[r][c];
      for (size_t j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
    }
    ++r;
  }
  return r;
}

template <typename K>
K det(Matrix<K> m) {
  assert(m.rows == m.cols);
  K d(1);
  for (size_t c = 0; c < m.cols; ++c) {
    size_t piv = c;
    while (piv < m.rows && scalar_is_zero(m.a[piv][c])) ++piv;
    if (piv == m.rows) return K(0);
    if (piv != c) {
      std::swap(m.a[piv], m.a[c]);
      d = -d;
    }
    d *= m.a[c][c];
    for (size_t i = c + 1; i < m.rows; ++i) {
      if (scalar_is_zero(m.a[i][c])) continue;
      K f = m.a[i][c] / m.a[c][c];
      for (size_t j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[c][j];
    }
  }
  return d;
}

/// Solve M x = b; throws if inconsistent, returns one solution.
template <typename K>
std::vector<K> solve(Matrix<K> m, std::vector<K> b) {
  assert(b.size() == m.rows);
  std::vector<size_t> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t piv = r;
    while (piv < m.rows && scalar_is_zero(m.a[piv][c])) ++piv;
    if (piv == m.rows) continue;
    std::swap(m.a[piv], m.a[r]);
    std::swap(b[piv], b[r]);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || scalar_is_zero(m.a[i][c])) continue;
      K f = m.a[i][c] / m.a[r][c];
      for (size_t j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
      b[i] -= f * b[r];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (size_t i = r; i < m.rows; ++i)
    if (!scalar_is_zero(b[i])) throw std::domain_error("solve: inconsistent system");
  std::vector<K> x(m.cols, K(0));
  for (size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i] / m.a[i][pivcol[i]];
  return x;
}

template <typename K>
Matrix<K> inverse(const Matrix<K>& m) {
  assert(m.rows == m.cols);
  size_t n = m.rows;
  Matrix<K> w = m, inv = Matrix<K>::identity(n);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && scalar_is_zero(w.a[piv][c])) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    std::swap(w.a[piv], w.a[c]);
    std::swap(inv.a[piv], inv.a[c]);
    K d = w.a[c][c];
    for (size_t j = 0; j < n; ++j) {
      w.a[c][j] /= d;
      inv.a[c][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || scalar_is_zero(w.a[i][c])) continue;
      K f = w.a[i][c];
      for (size_t j = 0; j < n; ++j) {
        w.a[i][j] -= f * w.a[c][j];
        inv.a[i][j] -= f * inv.a[c][j];
      }
    }
  }
  return inv;
}

/// Basis of the kernel of M, as rows.
template <typename K>
std::vector<std::vector<K>> nullspace(Matrix<K> m) {
  std::vector<long> pivot_of_col(m.cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t piv = r;
    while (piv < m.rows && scalar_is_zero(m.a[piv][c])) ++piv;
    if (piv == m.rows) continue;
    std::swap(m.a[piv], m.a[r]);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || scalar_is_zero(m.a[i][c])) continue;
      K f = m.a[i][c] / m.a[r][c];
      for (size_t j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
    }
    pivot_of_col[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<K>> basis;
  for (size_t c = 0; c < m.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<K> v(m.cols, K(0));
    v[c] = K(1);
    for (size_t c2 = 0; c2 < m.cols; ++c2) {
      long p = pivot_of_col[c2];
      if (p < 0) continue;
      v[c2] = -m.a[p][c] / m.a[p][c2];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace primcone
