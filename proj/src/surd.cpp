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

#include "kestab/surd.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

#include "kestab/error.hpp"

namespace kestab {
namespace {

using Terms = std::vector<Surd::Term>;

// Product of the radicands selected by mask.
long radicand_product(unsigned mask) {
  long p = 1;
  for (unsigned i = 0; i < Surd::kNumRadicands; ++i) {
    if (mask & (1u << i)) p *= Surd::kRadicands[i];
  }
  return p;
}

void normalize(Terms& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Surd::Term& a, const Surd::Term& b) { return a.mask < b.mask; });
  Terms out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mask == t.mask) {
      out.back().coef += t.coef;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Surd::Term& t) { return sgn(t.coef) == 0; });
  terms = std::move(out);
}

Terms add_terms(const Terms& a, const Terms& b, bool negate_b) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mask < b[j].mask)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mask < a[i].mask) {
      out.push_back({b[j].mask, negate_b ? mpq_class(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      mpq_class c = negate_b ? mpq_class(a[i].coef - b[j].coef)
                             : mpq_class(a[i].coef + b[j].coef);
      if (sgn(c) != 0) out.push_back({a[i].mask, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Terms mul_terms(const Terms& a, const Terms& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 && b.size() == 1 && a[0].mask == 0) {
    return {{b[0].mask, a[0].coef * b[0].coef}};
  }
  Terms out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      mpq_class c = x.coef * y.coef;
      const unsigned common = x.mask & y.mask;
      if (common) c *= radicand_product(common);
      out.push_back({x.mask ^ y.mask, std::move(c)});
    }
  }
  normalize(out);
  return out;
}

// Splits terms into (A, B) with value = A + B*sqrt(radicand(bit)), where
// neither A nor B uses the bit.
void split(const Terms& t, unsigned bit, Terms& a, Terms& b) {
  const unsigned m = 1u << bit;
  for (const auto& term : t) {
    if (term.mask & m) {
      b.push_back({term.mask & ~m, term.coef});
    } else {
      a.push_back(term);
    }
  }
}

// Sign of an element whose masks only use bits < levels.
int sign_terms(const Terms& t, unsigned levels) {
  if (t.empty()) return 0;
  if (levels == 0) return sgn(t.front().coef);
  const unsigned bit = levels - 1;
  Terms a, b;
  split(t, bit, a, b);
  const int sa = sign_terms(a, bit);
  const int sb = sign_terms(b, bit);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // Opposite signs: compare a^2 with p * b^2.
  Terms bb = mul_terms(b, b);
  const long p = Surd::kRadicands[bit];
  for (auto& term : bb) term.coef *= p;
  Terms diff = add_terms(mul_terms(a, a), bb, true);
  return sa * sign_terms(diff, bit);
}

Terms inverse_terms(const Terms& t, unsigned levels) {
  if (t.empty()) fail(ErrorKind::kInvalidInput, "division by zero");
  if (levels == 0) return {{0u, 1 / t.front().coef}};
  const unsigned bit = levels - 1;
  Terms a, b;
  split(t, bit, a, b);
  if (b.empty()) return inverse_terms(a, bit);
  // 1 / (a + b sqrt p) = (a - b sqrt p) / (a^2 - p b^2).
  Terms bb = mul_terms(b, b);
  const long p = Surd::kRadicands[bit];
  for (auto& term : bb) term.coef *= p;
  Terms norm_inv = inverse_terms(add_terms(mul_terms(a, a), bb, true), bit);
  Terms conj = a;
  for (const auto& term : b) conj.push_back({term.mask | (1u << bit), -term.coef});
  normalize(conj);
  return mul_terms(conj, norm_inv);
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Surd parse() {
    skip_ws();
    if (pos_ == s_.size()) error("empty number");
    Surd total;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      Surd term = parse_term();
      total += sign < 0 ? -term : term;
      first = false;
    }
    return total;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::kParse, "malformed number '" + std::string(s_) + "': " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool consume(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  mpq_class integer() { return mpq_class(mpz_class(digits())); }

  mpq_class decimal_or_ratio() {
    std::string whole = digits();
    mpq_class value{mpz_class(whole)};
    if (peek() == '.') {
      ++pos_;
      std::string frac = digits();
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      value += mpq_class(mpz_class(frac), scale);
      value.canonicalize();
    }
    if (peek() == '/') {
      ++pos_;
      mpq_class den = integer();
      if (sgn(den) == 0) error("zero denominator");
      value /= den;
    }
    return value;
  }

  Surd radical() {
    if (!consume("(")) error("expected '('");
    mpq_class r = integer();
    if (!consume(")")) error("expected ')'");
    if (!r.get_num().fits_slong_p()) error("radicand too large");
    return Surd::sqrt(r.get_num().get_si());
  }

  Surd parse_term() {
    skip_ws();
    Surd term;
    if (consume("sqrt")) {
      term = radical();
    } else {
      term = Surd(decimal_or_ratio());
      if (consume("*")) {
        if (!consume("sqrt")) error("expected sqrt after '*'");
        term *= radical();
      }
    }
    if (consume("/")) {
      mpq_class den = integer();
      if (sgn(den) == 0) error("zero denominator");
      term /= Surd(den);
    }
    return term;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Surd::Surd(long value) {
  if (value != 0) terms_.push_back({0u, mpq_class(value)});
}

Surd::Surd(const mpq_class& value) {
  if (sgn(value) != 0) {
    mpq_class v = value;
    v.canonicalize();
    terms_.push_back({0u, std::move(v)});
  }
}

Surd Surd::sqrt(long radicand) {
  if (radicand < 0) fail(ErrorKind::kInvalidInput, "sqrt of negative number");
  if (radicand == 0) return Surd();
  long rest = radicand;
  long outside = 1;
  for (long f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      outside *= f;
    }
  }
  unsigned mask = 0;
  for (unsigned i = 0; i < kNumRadicands; ++i) {
    if (rest % kRadicands[i] == 0) {
      rest /= kRadicands[i];
      mask |= 1u << i;
    }
  }
  if (rest != 1) {
    fail(ErrorKind::kUnsupported,
         "sqrt(" + std::to_string(radicand) + ") lies outside Q(sqrt2, sqrt3, sqrt5)");
  }
  return Surd(Terms{{mask, mpq_class(outside)}});
}

Surd Surd::from_double(double value) {
  if (!std::isfinite(value)) fail(ErrorKind::kInvalidInput, "non-finite value");
  return Surd(mpq_class(value));
}

Surd Surd::parse(std::string_view text) { return Parser(text).parse(); }

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mask == 0);
}

mpq_class Surd::rational() const {
  if (!is_rational()) fail(ErrorKind::kInvalidInput, "value " + str() + " is irrational");
  return terms_.empty() ? mpq_class(0) : terms_[0].coef;
}

int Surd::sign() const { return sign_terms(terms_, kNumRadicands); }

double Surd::to_double() const {
  double v = 0.0;
  for (const auto& t : terms_) {
    v += t.coef.get_d() * std::sqrt(static_cast<double>(radicand_product(t.mask)));
  }
  return v;
}

std::string Surd::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string c = t.coef.get_str();
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (t.mask == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += "sqrt(" + std::to_string(radicand_product(t.mask)) + ")";
    }
  }
  return out;
}

Surd Surd::operator-() const {
  Terms t = terms_;
  for (auto& term : t) term.coef = -term.coef;
  return Surd(std::move(t));
}

Surd& Surd::operator+=(const Surd& other) {
  terms_ = add_terms(terms_, other.terms_, false);
  return *this;
}

Surd& Surd::operator-=(const Surd& other) {
  terms_ = add_terms(terms_, other.terms_, true);
  return *this;
}

Surd& Surd::operator*=(const Surd& other) {
  terms_ = mul_terms(terms_, other.terms_);
  return *this;
}

Surd& Surd::operator/=(const Surd& other) {
  terms_ = mul_terms(terms_, inverse_terms(other.terms_, kNumRadicands));
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) { return Surd(mul_terms(a.terms_, b.terms_)); }

Surd Surd::inverse() const { return Surd(inverse_terms(terms_, kNumRadicands)); }

bool operator==(const Surd& a, const Surd& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mask != b.terms_[i].mask || a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

int Surd::structural_compare(const Surd& a, const Surd& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.mask != y.mask) return x.mask < y.mask ? -1 : 1;
    const int c = cmp(x.coef, y.coef);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

std::size_t Surd::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ t.mask;
    h = h * 1000003u ^ std::hash<std::string>{}(t.coef.get_str(16));
  }
  return h;
}

}  // namespace kestab
