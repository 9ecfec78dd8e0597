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

#ifndef KESTAB_POLYNOMIAL_HPP
#define KESTAB_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "kestab/linalg.hpp"

namespace kestab {

struct RootSystem;

// Exact multivariate polynomial stored as exponent vector -> coefficient.
// Zero coefficients are never stored.
class SparsePolynomial {
 public:
  using Exponent = std::vector<unsigned>;

  explicit SparsePolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static SparsePolynomial constant(std::size_t num_vars, const Surd& c);
  static SparsePolynomial monomial(const Exponent& exponent, const Surd& c = 1);
  // <coeffs, y> + c
  static SparsePolynomial affine(const Vec& coeffs, const Surd& c = Surd());

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponent, Surd>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;

  void add_term(const Exponent& exponent, const Surd& c);

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Surd& s);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const Surd& s, SparsePolynomial p) { return p *= s; }
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);

  SparsePolynomial pow(unsigned k) const;
  Surd evaluate(const Vec& y) const;
  double evaluate(std::span<const double> y) const;

  // p(v0 + M s) as a polynomial in s, where column j of M is columns[j].
  SparsePolynomial compose_affine(const Vec& v0, const std::vector<Vec>& columns) const;

 private:
  std::size_t num_vars_;
  std::map<Exponent, Surd> terms_;
};

// pi(y) = prod over positive roots of <alpha, y>^2; identically 1 for a torus.
SparsePolynomial pi_polynomial(const RootSystem& rs);

}  // namespace kestab

#endif  // KESTAB_POLYNOMIAL_HPP
