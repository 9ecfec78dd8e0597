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

#ifndef KESTAB_LINALG_HPP
#define KESTAB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kestab/surd.hpp"

namespace kestab {

// Exact vectors and row-major matrices over the Surd field. All coordinates
// are with respect to one fixed orthonormal basis of the weight space, so the
// inner product is the plain dot product.
using Vec = std::vector<Surd>;
using Matrix = std::vector<Vec>;

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Matrix identity(std::size_t n);

Surd dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Surd& s, const Vec& v);
bool is_zero(const Vec& v);

Vec apply(const Matrix& m, const Vec& v);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

// Reflection through the hyperplane orthogonal to alpha.
Vec reflect(const Vec& alpha, const Vec& v);
Matrix reflection_matrix(const Vec& alpha);

std::size_t rank(Matrix rows);
Surd determinant(Matrix m);
// Unique solution of a x = b, or nullopt when a is singular.
std::optional<Vec> solve(Matrix a, Vec b);
// Basis of {x : rows * x = 0}.
std::vector<Vec> null_space(const Matrix& rows, std::size_t ncols);
// Dimension of the affine hull of the points (-1 for an empty set).
int affine_dimension(std::span<const Vec> points);

int structural_compare(const Vec& a, const Vec& b);
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return structural_compare(a, b) < 0; }
};
struct MatrixLess {
  bool operator()(const Matrix& a, const Matrix& b) const;
};

std::vector<double> to_doubles(const Vec& v);
std::string format(const Vec& v);

}  // namespace kestab

#endif  // KESTAB_LINALG_HPP
