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

// Shared fixtures and hand-rolled generators for the test binaries.

#ifndef KESTAB_TESTS_SUPPORT_HPP
#define KESTAB_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "kestab/ding.hpp"
#include "kestab/polytope.hpp"
#include "kestab/root_system.hpp"

namespace kestab::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260515);
  return gen;
}

inline long rand_int(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

// p/q with |p| <= num_bound and 1 <= q <= den_bound.
inline Surd rand_rational(long num_bound = 20, long den_bound = 7) {
  return Surd(mpq_class(rand_int(-num_bound, num_bound), rand_int(1, den_bound)));
}

inline Surd rand_positive(long num_bound = 20, long den_bound = 7) {
  return Surd(mpq_class(rand_int(1, num_bound), rand_int(1, den_bound)));
}

inline Vec rand_vec(std::size_t n, long num_bound = 20, long den_bound = 7) {
  Vec v(n);
  for (auto& x : v) x = rand_rational(num_bound, den_bound);
  return v;
}

inline Surd rand_surd() {
  Surd s = rand_rational();
  for (long r : {2L, 3L, 5L, 6L, 10L, 15L, 30L}) {
    if (rand_int(0, 2) == 0) s += rand_rational() * Surd::sqrt(r);
  }
  return s;
}

inline HPolytope interval(const Surd& lo, const Surd& hi) {
  return HPolytope::from_inequalities(1, {{{Surd(1)}, hi}, {{Surd(-1)}, -lo}});
}

inline HPolytope symmetric_interval(const Surd& s) { return interval(-s, s); }

inline HPolytope box(std::size_t n, const Surd& s) {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < n; ++i) {
    hs.push_back({unit(n, i), s});
    hs.push_back({Surd(-1) * unit(n, i), s});
  }
  return HPolytope::from_inequalities(n, hs);
}

// Convex hull of the W-orbit of sum_i c_i varpi_i.
inline HPolytope orbit_polytope(const RootSystem& rs, const std::vector<Surd>& c) {
  Vec y = zeros(rs.ambient_dim);
  for (std::size_t i = 0; i < c.size(); ++i) y = y + c[i] * rs.fundamental_weights[i];
  return HPolytope::from_vertices(weyl_orbit(rs, y));
}

// Random centrally symmetric polygon: hull of +-v over a few random points.
inline HPolytope random_symmetric_polygon() {
  while (true) {
    std::vector<Vec> pts;
    const long k = rand_int(2, 4);
    for (long i = 0; i < k; ++i) {
      Vec v = rand_vec(2, 9, 4);
      pts.push_back(v);
      pts.push_back(-v);
    }
    if (affine_dimension(pts) == 2) return HPolytope::from_vertices(pts);
  }
}

inline double approx(const Surd& s) { return s.to_double(); }

// Random normalized W-invariant PL function: the zero piece plus the W-orbits
// of a few affine pieces with nonpositive offset.
inline PLConvexFunction random_pl_function(const RootSystem& rs, int orbits = 2) {
  PLConvexFunction u = PLConvexFunction::zero(rs.ambient_dim);
  for (int i = 0; i < orbits; ++i) {
    const Vec a = rand_vec(rs.ambient_dim, 6, 3);
    const Surd b = -rand_positive(6, 3) + Surd(1);
    const Surd offset = b.sign() > 0 ? Surd() : b;
    if (rs.is_toric()) {
      u.pieces.push_back({a, offset});
      continue;
    }
    for (const auto& g : weyl_orbit(rs, a)) u.pieces.push_back({g, offset});
  }
  return u;
}

}  // namespace kestab::testing

#endif  // KESTAB_TESTS_SUPPORT_HPP
