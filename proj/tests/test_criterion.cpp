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

#include <algorithm>

#include "doctest.h"
#include "kestab/criterion.hpp"
#include "kestab/error.hpp"
#include "support.hpp"

using namespace kestab;
using namespace kestab::testing;

namespace {

HPolytope translate(const HPolytope& p, const Vec& t) {
  std::vector<Vec> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return HPolytope::from_vertices(pts);
}

HPolytope scale_points(const HPolytope& p, const Surd& c) {
  std::vector<Vec> pts;
  for (const auto& v : p.vertices()) pts.push_back(c * v);
  return HPolytope::from_vertices(pts);
}

// Rank-1 closed form: on [0, 2s] with weight 2t^2 the centroid is 3s/2.
Surd rank_one_barycenter(const Surd& s) { return Surd(3) * s / Surd(2); }

}  // namespace

TEST_CASE("barycenter examples") {
  const Barycenter sq = barycenter(torus(2), box(2, 1));
  CHECK(sq.point == zeros(2));
  CHECK(sq.volume == Surd(16));
  const Barycenter seg = barycenter(torus(1), interval(Surd(), Surd(2)));
  CHECK(seg.point == Vec{Surd(2)});
  const RootSystem a1 = build_root_system("A1");
  for (const Surd& s : {Surd(1), Surd(mpq_class(3, 2)), Surd(2), Surd(mpq_class(17, 9))}) {
    const Barycenter b = barycenter(a1, symmetric_interval(s));
    CHECK(b.point == Vec{rank_one_barycenter(s)});
    // Integral of 2 t^2 over [0, 2s].
    CHECK(b.volume == Surd(16) * s * s * s / Surd(3));
  }
}

TEST_CASE("barycenter errors") {
  const RootSystem b2 = build_root_system("B2");
  std::vector<Halfspace> hs = box(2, 2).facets();
  hs.push_back({{Surd(1), Surd(1)}, Surd(3)});
  CHECK_THROWS_AS(barycenter(b2, HPolytope::from_inequalities(2, hs)), Error);
}

TEST_CASE("check_existence examples") {
  const StabilityReport sq = check_existence(torus(2), box(2, 1));
  CHECK(sq.verdict == Verdict::kExists);
  CHECK(sq.fine);
  const RootSystem a1 = build_root_system("A1");
  const StabilityReport stable = check_existence(a1, symmetric_interval(Surd(2)));
  CHECK(stable.verdict == Verdict::kExists);
  CHECK(stable.barycenter == Vec{Surd(3)});
  CHECK(stable.four_rho_interior);
  // b - 4 rho = (3 - 2 sqrt 2) e_1 = c_1 alpha with alpha = sqrt(2) e_1.
  CHECK(stable.cone.coefficients == Vec{Surd(3) / Surd::sqrt(2) - Surd(2)});
  const StabilityReport unstable = check_existence(a1, symmetric_interval(Surd(1)));
  CHECK(unstable.verdict == Verdict::kUnstable);
  CHECK_FALSE(unstable.four_rho_interior);
  CHECK(unstable.cone.coefficients[0] < Surd());
  const StabilityReport asym = check_existence(torus(1), interval(Surd(-1), Surd(3)));
  CHECK(asym.verdict == Verdict::kFutakiObstructed);
  CHECK(asym.central_component == Vec{Surd(2)});
}

TEST_CASE("verdict and existence claim on a non-fine polytope") {
  const HPolytope p = HPolytope::from_vertices({{Surd(-1), Surd(-1), Surd(-1)},
                                                {Surd(1), Surd(-1), Surd(-1)},
                                                {Surd(1), Surd(1), Surd(-1)},
                                                {Surd(-1), Surd(1), Surd(-1)},
                                                {Surd(0), Surd(0), Surd(1)}});
  const StabilityReport r = check_existence(torus(3), p);
  CHECK_FALSE(r.fine);
  CHECK(r.verdict == Verdict::kFutakiObstructed);
  CHECK_FALSE(r.existence_qualified());
}

TEST_CASE("report invariants tie the verdict to cone location") {
  for (const char* t : {"A1", "A2", "B2", "A1xA1"}) {
    const RootSystem rs = build_root_system(t);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Surd> c;
      for (std::size_t i = 0; i < rs.rank(); ++i) c.push_back(rand_positive(12, 3));
      const StabilityReport r = check_existence(rs, orbit_polytope(rs, c));
      CAPTURE(t);
      CHECK(is_zero(r.central_component));
      switch (r.cone.tag) {
        case ConeTag::kInterior: CHECK(r.verdict == Verdict::kExists); break;
        case ConeTag::kBoundary: CHECK(r.verdict == Verdict::kSemistableBoundary); break;
        default: CHECK(r.verdict == Verdict::kUnstable); break;
      }
      Vec back = rs.four_rho();
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        back = back + r.cone.coefficients[i] * rs.simple_roots[i];
      }
      CHECK(back == r.barycenter);
    }
  }
}

TEST_CASE("futaki examples") {
  CHECK(futaki(torus(2), box(2, 1), {Surd(3), Surd(-5)}).is_zero());
  CHECK(futaki(torus(1), interval(Surd(), Surd(2)), {Surd(1)}) == Surd(2));
  const HPolytope p = translate(box(2, 1), {Surd(mpq_class(1, 3)), Surd(-1)});
  for (int trial = 0; trial < 10; ++trial) {
    const Vec x = rand_vec(2), y = rand_vec(2);
    CHECK(futaki(torus(2), p, x + y) == futaki(torus(2), p, x) + futaki(torus(2), p, y));
  }
  const RootSystem a1c = build_root_system("A1", 1);
  const HPolytope cyl = HPolytope::from_vertices({{Surd(-1), Surd(0)}, {Surd(1), Surd(0)},
                                                  {Surd(-1), Surd(2)}, {Surd(1), Surd(2)}});
  CHECK(futaki(a1c, cyl, {Surd(0), Surd(1)}) == Surd(2));
  CHECK(check_existence(a1c, cyl).verdict == Verdict::kFutakiObstructed);
  CHECK_THROWS_AS(futaki(a1c, cyl, {Surd(1), Surd(0)}), Error);
  CHECK_THROWS_AS(futaki(a1c, cyl, {Surd(1)}), Error);
}

TEST_CASE("scaling invariance under a rescaled inner product") {
  // Rescaling the product on a factor is a linear change of orthonormal
  // coordinates; roots and P move together.
  const RootSystem b2 = build_root_system("B2");
  const HPolytope p = orbit_polytope(b2, {Surd(2), Surd(1)});
  const StabilityReport base = check_existence(b2, p);
  for (const Surd& c : {Surd(2), Surd(mpq_class(1, 3)), Surd::sqrt(3)}) {
    RootSystemSpec spec;
    for (const auto& a : b2.simple_roots) spec.simple_roots.push_back(c * a);
    const RootSystem scaled = build_root_system(spec);
    const StabilityReport r = check_existence(scaled, scale_points(p, c));
    CHECK(r.verdict == base.verdict);
    CHECK(r.cone.tag == base.cone.tag);
    CHECK(r.cone.coefficients == base.cone.coefficients);
    CHECK(r.barycenter == c * base.barycenter);
  }
}

TEST_CASE("relabeling simple roots permutes the coefficients") {
  for (const char* t : {"B2", "G2", "A2"}) {
    const RootSystem rs = build_root_system(t);
    const HPolytope p = orbit_polytope(rs, {Surd(3), Surd(1)});
    const StabilityReport base = check_existence(rs, p);
    RootSystemSpec spec;
    spec.simple_roots = {rs.simple_roots[1], rs.simple_roots[0]};
    const StabilityReport r = check_existence(build_root_system(spec), p);
    CHECK(r.verdict == base.verdict);
    CHECK(r.cone.coefficients == Vec{base.cone.coefficients[1], base.cone.coefficients[0]});
  }
}

TEST_CASE("toric reduction: Exists iff the barycenter vanishes") {
  for (int trial = 0; trial < 10; ++trial) {
    const HPolytope p = random_symmetric_polygon();
    const StabilityReport r = check_existence(torus(2), p);
    CHECK(r.verdict == Verdict::kExists);
    CHECK(is_zero(r.barycenter));
    Vec t = rand_vec(2, 3, 4);
    if (is_zero(t)) t = {Surd(1), Surd()};
    if (!p.contains_in_interior(Surd(-1) * t)) continue;
    const StabilityReport moved = check_existence(torus(2), translate(p, t));
    CHECK(moved.verdict == Verdict::kFutakiObstructed);
    CHECK(moved.barycenter == Surd(2) * t);
  }
}

TEST_CASE("dilation covariance of the barycenter") {
  for (const char* t : {"A1", "A2", "B2"}) {
    const RootSystem rs = build_root_system(t);
    const HPolytope p = orbit_polytope(rs, std::vector<Surd>(rs.rank(), Surd(1)));
    const Barycenter b = barycenter(rs, p);
    for (int trial = 0; trial < 3; ++trial) {
      const Surd k = rand_positive(9, 4);
      CHECK(barycenter(rs, dilate(p, k)).point == k * b.point);
    }
  }
}
