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

#ifndef KESTAB_SURD_HPP
#define KESTAB_SURD_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kestab {

// Exact element of the real field Q(sqrt 2, sqrt 3, sqrt 5).
//
// Root systems of types A1..A5, B, C, D and G2 normalized so that long roots
// have squared length 2 have coordinates in this field when written in an
// orthonormal basis, so every polytope, barycenter and cone computation stays
// exact. A value is a sum of terms c * sqrt(m) where m is a squarefree product
// of {2, 3, 5}; the term is keyed by a 3-bit mask selecting the radicands.
//
// The representation is canonical (terms sorted by mask, no zero
// coefficients), so structural equality is value equality.
class Surd {
 public:
  static constexpr int kRadicands[3] = {2, 3, 5};
  static constexpr unsigned kNumRadicands = 3;

  Surd() = default;
  Surd(long value);  // NOLINT(google-explicit-constructor)
  Surd(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  // sqrt(radicand) for a nonnegative integer whose squarefree part divides 30.
  static Surd sqrt(long radicand);
  // Exact binary value of a finite double.
  static Surd from_double(double value);
  // Parses "p/q", "-3", "1.25", "3/2*sqrt(2)", "sqrt(6)/3", "1-2*sqrt(5)".
  static Surd parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Requires is_rational().
  mpq_class rational() const;
  int sign() const;
  double to_double() const;
  // Canonical text form accepted by parse().
  std::string str() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& other);
  Surd& operator-=(const Surd& other);
  Surd& operator*=(const Surd& other);
  Surd& operator/=(const Surd& other);

  Surd abs() const { return sign() < 0 ? -*this : *this; }
  Surd inverse() const;

  // Fast canonical total order on representations. Not the order of the reals;
  // use it for sorting and deduplication only.
  static int structural_compare(const Surd& a, const Surd& b);
  std::size_t hash() const;

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

  friend bool operator==(const Surd& a, const Surd& b);
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }
  friend bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Surd& a, const Surd& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Surd& a, const Surd& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Surd& a, const Surd& b) { return (a - b).sign() >= 0; }

  struct Term {
    unsigned mask;
    mpq_class coef;
  };
  const std::vector<Term>& terms() const { return terms_; }

 private:
  explicit Surd(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

// Real order comparison helpers.
inline const Surd& min(const Surd& a, const Surd& b) { return b < a ? b : a; }
inline const Surd& max(const Surd& a, const Surd& b) { return a < b ? b : a; }

}  // namespace kestab

#endif  // KESTAB_SURD_HPP
