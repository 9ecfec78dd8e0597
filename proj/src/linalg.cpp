// Copyright 2026 The kestab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kestab/linalg.hpp"

#include <cassert>
#include <utility>

#include "kestab/error.hpp"

namespace kestab {

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Matrix identity(std::size_t n) {
  Matrix m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Surd dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::kInvalidInput, "dimension mismatch in dot product");
  Surd s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::kInvalidInput, "dimension mismatch in sum");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::kInvalidInput, "dimension mismatch in difference");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec operator*(const Surd& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec apply(const Matrix& m, const Vec& v) {
  Vec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const Matrix bt = transpose(b);
  Matrix r(a.size(), Vec(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
  }
  return r;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

Vec reflect(const Vec& alpha, const Vec& v) {
  const Surd coef = Surd(2) * dot(v, alpha) / dot(alpha, alpha);
  return v - coef * alpha;
}

Matrix reflection_matrix(const Vec& alpha) {
  const std::size_t n = alpha.size();
  const Surd scale = Surd(2) / dot(alpha, alpha);
  Matrix m = identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] -= scale * alpha[i] * alpha[j];
  }
  return m;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Surd inv = m[row][col].inverse();
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Surd f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) {
        if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  return row_reduce(rows, ncols).size();
}

Surd determinant(Matrix m) {
  const std::size_t n = m.size();
  Surd det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) return Surd();
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Surd inv = m[col][col].inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      const Surd f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) {
        if (!m[col][j].is_zero()) m[i][j] -= f * m[col][j];
      }
    }
  }
  return det;
}

std::optional<Vec> solve(Matrix a, Vec b) {
  const std::size_t n = a.size();
  assert(b.size() == n);
  if (n == 0) return Vec{};
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = row_reduce(a, n + 1);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<Vec> null_space(const Matrix& rows, std::size_t ncols) {
  Matrix m = rows;
  const auto pivots = row_reduce(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_dimension(std::span<const Vec> points) {
  if (points.empty()) return -1;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(std::move(diffs)));
}

int structural_compare(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = Surd::structural_compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool MatrixLess::operator()(const Matrix& a, const Matrix& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = structural_compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<double> to_doubles(const Vec& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].to_double();
  return r;
}

std::string format(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace kestab
