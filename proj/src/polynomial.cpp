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

#include "kestab/polynomial.hpp"

#include <cmath>

#include "kestab/error.hpp"
#include "kestab/root_system.hpp"

namespace kestab {

SparsePolynomial SparsePolynomial::constant(std::size_t num_vars, const Surd& c) {
  SparsePolynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const Exponent& exponent, const Surd& c) {
  SparsePolynomial p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

SparsePolynomial SparsePolynomial::affine(const Vec& coeffs, const Surd& c) {
  const std::size_t n = coeffs.size();
  SparsePolynomial p(n);
  p.add_term(Exponent(n, 0), c);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

unsigned SparsePolynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void SparsePolynomial::add_term(const Exponent& exponent, const Surd& c) {
  if (exponent.size() != num_vars_) fail(ErrorKind::kInvalidInput, "exponent size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  if (other.num_vars_ != num_vars_) fail(ErrorKind::kInvalidInput, "polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  if (other.num_vars_ != num_vars_) fail(ErrorKind::kInvalidInput, "polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Surd& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.num_vars_ != b.num_vars_) fail(ErrorKind::kInvalidInput, "polynomial arity mismatch");
  SparsePolynomial r(a.num_vars_);
  SparsePolynomial::Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
  return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

SparsePolynomial SparsePolynomial::pow(unsigned k) const {
  SparsePolynomial result = constant(num_vars_, 1);
  SparsePolynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Surd SparsePolynomial::evaluate(const Vec& y) const {
  if (y.size() != num_vars_) fail(ErrorKind::kInvalidInput, "evaluation point has wrong dimension");
  Surd total;
  for (const auto& [e, c] : terms_) {
    Surd term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= y[i];
    }
    total += term;
  }
  return total;
}

double SparsePolynomial::evaluate(std::span<const double> y) const {
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= std::pow(y[i], static_cast<int>(e[i]));
    }
    total += term;
  }
  return total;
}

SparsePolynomial SparsePolynomial::compose_affine(const Vec& v0,
                                                  const std::vector<Vec>& columns) const {
  const std::size_t m = columns.size();
  // y_i(s) = v0_i + sum_j columns[j][i] s_j, with cached powers.
  std::vector<std::vector<SparsePolynomial>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    Vec coeffs(m);
    for (std::size_t j = 0; j < m; ++j) coeffs[j] = columns[j][i];
    powers[i].push_back(constant(m, 1));
    powers[i].push_back(affine(coeffs, v0[i]));
  }
  auto power = [&](std::size_t i, unsigned k) -> const SparsePolynomial& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][k];
  };
  SparsePolynomial result(m);
  for (const auto& [e, c] : terms_) {
    SparsePolynomial term = constant(m, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i]) term = term * power(i, e[i]);
    }
    result += term;
  }
  return result;
}

SparsePolynomial pi_polynomial(const RootSystem& rs) {
  SparsePolynomial p = SparsePolynomial::constant(rs.ambient_dim, 1);
  for (const auto& alpha : rs.positive_roots) {
    const SparsePolynomial form = SparsePolynomial::affine(alpha);
    p = p * (form * form);
  }
  return p;
}

}  // namespace kestab
