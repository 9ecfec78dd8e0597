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

#include "kestab/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <regex>
#include <set>

#include "kestab/error.hpp"

namespace kestab {
namespace {

constexpr std::size_t kMaxRoots = 20000;

// Simple roots of one irreducible factor in its own orthonormal coordinates.
std::vector<Vec> factor_simple_roots(char family, std::size_t n) {
  std::vector<Vec> roots;
  auto e = [n](std::size_t i) { return unit(n, i); };
  switch (family) {
    case 'A': {
      // Orthonormal basis of the sum-zero hyperplane of R^{n+1}:
      // b_k = (1, ..., 1, -k, 0, ...) / sqrt(k(k+1)), k = 1..n.
      std::vector<Surd> norm(n + 1);
      for (std::size_t k = 1; k <= n; ++k) {
        norm[k] = Surd::sqrt(static_cast<long>(k * (k + 1))).inverse();
      }
      auto entry = [](std::size_t k, std::size_t j) -> long {
        if (j < k) return 1;
        if (j == k) return -static_cast<long>(k);
        return 0;
      };
      for (std::size_t i = 0; i < n; ++i) {
        Vec a(n);
        for (std::size_t k = 1; k <= n; ++k) {
          a[k - 1] = Surd(entry(k, i) - entry(k, i + 1)) * norm[k];
        }
        roots.push_back(std::move(a));
      }
      break;
    }
    case 'B':
      if (n < 2) fail(ErrorKind::kUnsupported, "type B needs rank >= 2");
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(e(i) - e(i + 1));
      roots.push_back(e(n - 1));
      break;
    case 'C': {
      if (n < 2) fail(ErrorKind::kUnsupported, "type C needs rank >= 2");
      const Surd half_sqrt2 = Surd::sqrt(2) / Surd(2);
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(half_sqrt2 * (e(i) - e(i + 1)));
      roots.push_back(Surd::sqrt(2) * e(n - 1));
      break;
    }
    case 'D':
      if (n < 3) fail(ErrorKind::kUnsupported, "type D needs rank >= 3");
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(e(i) - e(i + 1));
      roots.push_back(e(n - 2) + e(n - 1));
      break;
    case 'G':
      if (n != 2) fail(ErrorKind::kUnsupported, "type G only exists in rank 2");
      roots.push_back({Surd::sqrt(6) / Surd(3), Surd()});
      roots.push_back({-Surd::sqrt(6) / Surd(2), -Surd::sqrt(2) / Surd(2)});
      break;
    default:
      fail(ErrorKind::kUnsupported, std::string("unsupported Cartan type ") + family);
  }
  return roots;
}

std::vector<Vec> roots_from_label(const std::string& label, std::size_t& root_dim) {
  static const std::regex factor_re(R"(\s*([A-Za-z])\s*(\d+)\s*)");
  std::vector<std::pair<char, std::size_t>> factors;
  std::size_t start = 0;
  while (start <= label.size()) {
    std::size_t end = label.find_first_of("xX*", start);
    if (end == std::string::npos) end = label.size();
    const std::string piece = label.substr(start, end - start);
    std::smatch m;
    if (!std::regex_match(piece, m, factor_re)) {
      fail(ErrorKind::kUnsupported, "unknown Cartan type '" + label + "'");
    }
    const char family = static_cast<char>(std::toupper(m[1].str()[0]));
    const std::size_t n = std::stoul(m[2].str());
    if (n == 0) fail(ErrorKind::kUnsupported, "rank 0 factor in '" + label + "'");
    if (family == 'E' || family == 'F') {
      fail(ErrorKind::kUnsupported, "exceptional types E and F are not supported");
    }
    factors.emplace_back(family, n);
    start = end + 1;
  }
  root_dim = 0;
  for (const auto& f : factors) root_dim += f.second;
  std::vector<Vec> roots;
  std::size_t offset = 0;
  for (const auto& [family, n] : factors) {
    for (const auto& r : factor_simple_roots(family, n)) {
      Vec full(root_dim);
      std::copy(r.begin(), r.end(), full.begin() + static_cast<std::ptrdiff_t>(offset));
      roots.push_back(std::move(full));
    }
    offset += n;
  }
  return roots;
}

Matrix gram(const std::vector<Vec>& roots) {
  Matrix g(roots.size(), Vec(roots.size()));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i; j < roots.size(); ++j) g[i][j] = g[j][i] = dot(roots[i], roots[j]);
  }
  return g;
}

void check_simple_roots(const std::vector<Vec>& roots, bool allow_noncrystallographic) {
  if (rank(roots) != roots.size()) {
    fail(ErrorKind::kInvalidInput, "simple roots are linearly dependent");
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      const Surd ip = dot(roots[i], roots[j]);
      if (ip.sign() > 0) {
        fail(ErrorKind::kInvalidInput, "simple roots " + std::to_string(i + 1) + " and " +
                                           std::to_string(j + 1) + " form an acute angle");
      }
      if (allow_noncrystallographic || j < i) continue;
      const Surd aij = Surd(2) * ip / dot(roots[j], roots[j]);
      const Surd aji = Surd(2) * ip / dot(roots[i], roots[i]);
      bool ok = aij.is_rational() && aji.is_rational() &&
                aij.rational().get_den() == 1 && aji.rational().get_den() == 1;
      if (ok) {
        const mpq_class prod = aij.rational() * aji.rational();
        ok = prod >= 0 && prod <= 3;
      }
      if (!ok) {
        fail(ErrorKind::kInvalidInput, "non-crystallographic angle between simple roots " +
                                           std::to_string(i + 1) + " and " +
                                           std::to_string(j + 1));
      }
    }
  }
}

RootSystem assemble(std::string label, std::vector<Vec> simple, std::size_t ambient,
                    std::vector<Vec> central_basis) {
  RootSystem rs;
  rs.label = std::move(label);
  rs.ambient_dim = ambient;
  rs.central_dim = ambient - simple.size();
  rs.simple_roots = std::move(simple);
  rs.central_basis = std::move(central_basis);
  for (const auto& a : rs.simple_roots) rs.weyl_generators.push_back(reflection_matrix(a));

  // Close the simple roots under simple reflections.
  std::set<Vec, VecLess> all(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<Vec> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : rs.simple_roots) {
      Vec w = reflect(a, v);
      if (all.insert(w).second) {
        if (all.size() > kMaxRoots) {
          fail(ErrorKind::kInvalidInput, "root closure is infinite; input is not a root system");
        }
        queue.push_back(std::move(w));
      }
    }
  }

  std::vector<std::pair<Surd, Vec>> positive;
  for (const auto& v : all) {
    const Vec c = simple_coordinates(rs, v);
    bool nonneg = true;
    Surd height;
    for (const auto& x : c) {
      if (x.sign() < 0) nonneg = false;
      height += x;
    }
    if (nonneg) positive.emplace_back(height, v);
  }
  if (positive.size() * 2 != all.size()) {
    fail(ErrorKind::kInvalidInput, "roots do not split into positive and negative halves");
  }
  std::stable_sort(positive.begin(), positive.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  rs.two_rho = zeros(ambient);
  for (auto& [h, v] : positive) {
    rs.two_rho = rs.two_rho + v;
    rs.positive_roots.push_back(std::move(v));
  }

  const Matrix g = gram(rs.simple_roots);
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    Vec rhs(rs.rank());
    rhs[j] = g[j][j] / Surd(2);
    const auto m = solve(g, rhs);
    Vec w = zeros(ambient);
    for (std::size_t k = 0; k < rs.rank(); ++k) w = w + (*m)[k] * rs.simple_roots[k];
    rs.fundamental_weights.push_back(std::move(w));
  }
  return rs;
}

}  // namespace

RootSystem torus(std::size_t dim) {
  std::vector<Vec> central;
  for (std::size_t i = 0; i < dim; ++i) central.push_back(unit(dim, i));
  return assemble("T" + std::to_string(dim), {}, dim, std::move(central));
}

RootSystem build_root_system(const RootSystemSpec& spec) {
  if (!spec.type.empty() && !spec.simple_roots.empty()) {
    fail(ErrorKind::kInvalidInput, "give either a Cartan type or explicit simple roots");
  }
  if (!spec.type.empty()) {
    std::size_t root_dim = 0;
    std::vector<Vec> roots = roots_from_label(spec.type, root_dim);
    const std::size_t ambient = root_dim + spec.central_dim;
    for (auto& r : roots) r.resize(ambient);
    std::vector<Vec> central;
    for (std::size_t i = root_dim; i < ambient; ++i) central.push_back(unit(ambient, i));
    std::string label = spec.type;
    if (spec.central_dim) label += "+T" + std::to_string(spec.central_dim);
    return assemble(std::move(label), std::move(roots), ambient, std::move(central));
  }
  if (spec.simple_roots.empty()) {
    if (spec.central_dim == 0) fail(ErrorKind::kInvalidInput, "empty root data");
    return torus(spec.central_dim);
  }
  const std::size_t r = spec.simple_roots.size();
  std::size_t ambient = spec.simple_roots[0].size();
  std::vector<Vec> roots = spec.simple_roots;
  for (const auto& v : roots) {
    if (v.size() != ambient) fail(ErrorKind::kInvalidInput, "simple roots have mixed dimensions");
  }
  if (ambient == r && spec.central_dim > 0) {
    ambient += spec.central_dim;
    for (auto& v : roots) v.resize(ambient);
  } else if (ambient != r + spec.central_dim) {
    fail(ErrorKind::kInvalidInput,
         "simple roots have dimension " + std::to_string(ambient) + " but rank " +
             std::to_string(r) + " plus central_dim " + std::to_string(spec.central_dim) +
             " requires " + std::to_string(r + spec.central_dim));
  }
  check_simple_roots(roots, spec.allow_noncrystallographic);
  std::vector<Vec> central = null_space(roots, ambient);
  return assemble("custom", std::move(roots), ambient, std::move(central));
}

RootSystem build_root_system(const std::string& type, std::size_t central_dim) {
  if (type.empty() || type == "T") return torus(central_dim);
  RootSystemSpec spec;
  spec.type = type;
  spec.central_dim = central_dim;
  return build_root_system(spec);
}

std::vector<Matrix> generate_weyl_group(const RootSystem& rs, std::size_t max_order) {
  std::vector<Matrix> elements{identity(rs.ambient_dim)};
  std::set<Matrix, MatrixLess> seen(elements.begin(), elements.end());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : rs.weyl_generators) {
      Matrix m = multiply(s, elements[head]);
      if (seen.insert(m).second) {
        if (seen.size() > max_order) {
          fail(ErrorKind::kInvalidInput, "Weyl group closure exceeds " +
                                             std::to_string(max_order) + " elements");
        }
        elements.push_back(std::move(m));
      }
    }
  }
  return elements;
}

std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& v) {
  std::set<Vec, VecLess> orbit{v};
  std::deque<Vec> queue{v};
  while (!queue.empty()) {
    Vec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : rs.simple_roots) {
      Vec y = reflect(a, x);
      if (orbit.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {orbit.begin(), orbit.end()};
}

Vec simple_coordinates(const RootSystem& rs, const Vec& v) {
  if (v.size() != rs.ambient_dim) fail(ErrorKind::kInvalidInput, "dimension mismatch");
  if (rs.is_toric()) return {};
  Vec rhs(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) rhs[i] = dot(rs.simple_roots[i], v);
  return *solve(gram(rs.simple_roots), rhs);
}

Vec central_component(const RootSystem& rs, const Vec& v) {
  const Vec c = simple_coordinates(rs, v);
  Vec r = v;
  for (std::size_t i = 0; i < c.size(); ++i) r = r - c[i] * rs.simple_roots[i];
  return r;
}

ConeLocation cone_locate(const RootSystem& rs, const Vec& v) {
  if (v.size() != rs.ambient_dim) {
    fail(ErrorKind::kInvalidInput, "cone_locate: vector has dimension " +
                                       std::to_string(v.size()) + ", expected " +
                                       std::to_string(rs.ambient_dim));
  }
  ConeLocation loc;
  if (!is_zero(central_component(rs, v))) {
    loc.tag = ConeTag::kNotInSpan;
    return loc;
  }
  loc.coefficients = simple_coordinates(rs, v);
  bool any_zero = false, any_negative = false;
  for (const auto& c : loc.coefficients) {
    const int s = c.sign();
    any_zero |= s == 0;
    any_negative |= s < 0;
  }
  loc.tag = any_negative ? ConeTag::kOutside : any_zero ? ConeTag::kBoundary : ConeTag::kInterior;
  return loc;
}

const char* to_string(ConeTag tag) {
  switch (tag) {
    case ConeTag::kInterior: return "interior";
    case ConeTag::kBoundary: return "boundary";
    case ConeTag::kOutside: return "outside";
    case ConeTag::kNotInSpan: return "not_in_span";
  }
  return "?";
}

}  // namespace kestab
