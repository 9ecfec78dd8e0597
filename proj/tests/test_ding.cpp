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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "kestab/ding.hpp"
#include "kestab/error.hpp"
#include "support.hpp"

using namespace kestab;
using namespace kestab::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::kInvalidInput;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

PLConvexFunction abs_function() {
  return {{{{Surd(1)}, Surd()}, {{Surd(-1)}, Surd()}}};
}

// Closed form of c_1 for A1 and P = [-s, s]: 3s / (2 sqrt 2) - 2.
Surd rank_one_c1(const Surd& s) { return Surd(3) * s / (Surd(2) * Surd::sqrt(2)) - Surd(2); }

QuadratureConfig fast() {
  QuadratureConfig q;
  q.step = 0.01;
  return q;
}

const DingContext& toric_ctx() {
  static const DingContext ctx(torus(1), symmetric_interval(Surd(1)));
  return ctx;
}

const DingContext& stable_ctx() {
  static const DingContext ctx(build_root_system("A1"), symmetric_interval(Surd(2)));
  return ctx;
}

const DingContext& unstable_ctx() {
  static const DingContext ctx(build_root_system("A1"),
                               symmetric_interval(Surd(mpq_class(3, 2))));
  return ctx;
}

}  // namespace

TEST_CASE("validate_pl_function examples") {
  const RootSystem a1 = build_root_system("A1");
  const HPolytope p2 = symmetric_interval(Surd(4));
  CHECK_NOTHROW(validate_pl_function(a1, p2, PLConvexFunction::zero(1)));
  CHECK_NOTHROW(validate_pl_function(a1, p2, test_ray(a1, 1, Surd(7))));
  const PLConvexFunction linear{{{{Surd(1)}, Surd()}}};
  CHECK(kind_of([&] { validate_pl_function(torus(1), p2, linear); }) == ErrorKind::kInvalidInput);
  CHECK(message_of([&] { validate_pl_function(torus(1), p2, linear); }).find("normalization") !=
        std::string::npos);
  const PLConvexFunction shifted{{{{Surd(0)}, Surd(1)}}};
  CHECK_THROWS_AS(validate_pl_function(torus(1), p2, shifted), Error);
  const PLConvexFunction tilted{{{{Surd(0)}, Surd()}, {{Surd(1)}, Surd(-1)}}};
  CHECK(message_of([&] { validate_pl_function(a1, p2, tilted); }).find("W-invariance") !=
        std::string::npos);
  CHECK_NOTHROW(validate_pl_function(torus(1), p2, tilted));
  CHECK(message_of([&] {
          validate_pl_function(torus(1), interval(Surd(1), Surd(2)), PLConvexFunction::zero(1));
        }).find("origin") != std::string::npos);
}

TEST_CASE("refine_subdivision examples") {
  const HPolytope p2 = symmetric_interval(Surd(2));
  const auto one = refine_subdivision(p2, PLConvexFunction::zero(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].region == p2);
  const RootSystem a1 = build_root_system("A1");
  const auto two = refine_subdivision(p2, test_ray(a1, 1, Surd(3)));
  REQUIRE(two.size() == 2);
  CHECK(((two[0].region == interval(Surd(-2), Surd())) || (two[1].region == interval(Surd(-2), Surd()))));
  const RootSystem a2 = build_root_system("A2");
  const HPolytope hex2 = dilate(orbit_polytope(a2, {Surd(1), Surd(1)}), Surd(2));
  CHECK(refine_subdivision(hex2, test_ray(a2, 1, Surd(1))).size() ==
        weyl_orbit(a2, a2.fundamental_weights[0]).size());
  // Cells cover 2P.
  const PLConvexFunction u = random_pl_function(a2, 2);
  Surd total;
  for (const auto& c : refine_subdivision(hex2, u)) total += volume(c.region);
  CHECK(total == volume(hex2));
}

TEST_CASE("legendre_eval examples") {
  const HPolytope p2 = symmetric_interval(Surd(2));
  CHECK(legendre_eval(p2, PLConvexFunction::zero(1), Vec{Surd(3)}) == Surd(6));
  const double x = 3.0;
  CHECK(legendre_eval(p2, PLConvexFunction::zero(1), std::span<const double>(&x, 1)) ==
        doctest::Approx(6.0));
  const RootSystem a2 = build_root_system("A2");
  const HPolytope hex2 = dilate(orbit_polytope(a2, {Surd(1), Surd(1)}), Surd(2));
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(legendre_eval(hex2, random_pl_function(a2), zeros(2)).is_zero());
  }
}

TEST_CASE("legendre_eval matches a 1-D grid sup") {
  const RootSystem a1 = build_root_system("A1");
  const HPolytope p2 = symmetric_interval(Surd(3));
  for (int trial = 0; trial < 10; ++trial) {
    const PLConvexFunction u = random_pl_function(a1, 3);
    const double x = rand_rational(8, 3).to_double();
    double sup = -std::numeric_limits<double>::infinity();
    const double h = 1e-3;
    for (int i = -3000; i <= 3000; ++i) {
      const double y = i * h;
      sup = std::max(sup, x * y - u(std::span<const double>(&y, 1)));
    }
    // The objective is Lipschitz with constant |x| + max |a_j| on the grid cells.
    double lip = std::abs(x);
    for (const auto& piece : u.pieces) lip = std::max(lip, std::abs(x) + std::abs(approx(piece.gradient[0])));
    const double exact = legendre_eval(p2, u, std::span<const double>(&x, 1));
    CHECK(sup <= exact + 1e-12);
    CHECK(exact - sup <= lip * h);
  }
}

TEST_CASE("Fenchel inequality with equality at the maximizer") {
  for (const char* t : {"A1", "A2", "B2"}) {
    const RootSystem rs = build_root_system(t);
    const HPolytope p2 = dilate(orbit_polytope(rs, std::vector<Surd>(rs.rank(), Surd(1))), Surd(2));
    const PLConvexFunction u = random_pl_function(rs);
    const LegendreTransform psi(p2, u);
    for (int trial = 0; trial < 10; ++trial) {
      const Vec x = rand_vec(rs.ambient_dim, 9, 4);
      const Surd px = psi(x);
      for (const auto& y : p2.vertices()) CHECK(px + u(y) >= dot(x, y));
      const Vec& y = psi.argmax(x);
      CHECK(px + u(y) == dot(x, y));
    }
  }
}

TEST_CASE("legendre of zero is the support function") {
  for (const char* t : {"A2", "B2", "G2"}) {
    const RootSystem rs = build_root_system(t);
    const HPolytope p2 = dilate(orbit_polytope(rs, {Surd(1), Surd(2)}), Surd(2));
    for (int trial = 0; trial < 10; ++trial) {
      const Vec x = rand_vec(2);
      CHECK(legendre_eval(p2, PLConvexFunction::zero(2), x) == p2.support(x));
    }
  }
}

TEST_CASE("grid minimum of psi - <4 rho, .> over the chamber is -u(4 rho)") {
  const RootSystem a1 = build_root_system("A1");
  const DingContext& ctx = stable_ctx();
  const Vec four_rho = a1.four_rho();
  const double fr = four_rho[0].to_double();
  for (int trial = 0; trial < 5; ++trial) {
    const PLConvexFunction u = random_pl_function(a1, 2);
    const LegendreTransform psi(ctx.doubled(), u);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 40000; ++i) {
      const double x = i * 1e-3;
      best = std::min(best, psi(std::span<const double>(&x, 1)) - fr * x);
    }
    CHECK(std::abs(best + u(four_rho).to_double()) < 1e-2);
  }
}

TEST_CASE("l_functional examples") {
  CHECK(l_functional(stable_ctx(), PLConvexFunction::zero(1)).is_zero());
  CHECK(l_functional(toric_ctx(), abs_function()) == Surd(1));
  const RootSystem a1 = build_root_system("A1");
  for (const Surd& lambda : {Surd(1), Surd(mpq_class(7, 3)), Surd(40)}) {
    CHECK(l_functional(stable_ctx(), test_ray(a1, 1, lambda)) == lambda * rank_one_c1(Surd(2)));
  }
}

TEST_CASE("L-ray identity on A2 from the cone coefficients") {
  const RootSystem a2 = build_root_system("A2");
  const DingContext ctx(a2, orbit_polytope(a2, {Surd(3), Surd(1)}));
  const ConeLocation& cone = ctx.stability().cone;
  for (std::size_t k = 1; k <= 2; ++k) {
    const Vec& a = a2.simple_roots[k - 1];
    const Surd lambda = rand_positive();
    CHECK(l_functional(ctx, test_ray(a2, k, lambda)) ==
          lambda * cone.coefficients[k - 1] * dot(a, a) / Surd(2));
  }
}

TEST_CASE("f_functional examples") {
  const DingContext& t = toric_ctx();
  CHECK(std::abs(f_functional(t, PLConvexFunction::zero(1), QuadratureConfig{})) < 1e-4);
  // F(|y|) on [-2, 2]: psi = 2 max(|x| - 1, 0), integral = 2 + 1 = 3.
  CHECK(f_functional(t, abs_function(), QuadratureConfig{}) == doctest::Approx(-std::log(3.0)).epsilon(1e-4));
  const RootSystem a1 = build_root_system("A1");
  for (const DingContext* ctx : {&stable_ctx(), &unstable_ctx()}) {
    for (const PLConvexFunction& u : {PLConvexFunction::zero(1), test_ray(a1, 1, Surd(2)),
                                      random_pl_function(a1)}) {
      QuadratureConfig coarse;
      QuadratureConfig fine = coarse;
      fine.step /= 2;
      CHECK(std::abs(f_functional(*ctx, u, coarse) - f_functional(*ctx, u, fine)) < 1e-4);
    }
  }
}

TEST_CASE("f_functional errors") {
  const DingContext bad(build_root_system("A1"), symmetric_interval(Surd(1)));
  CHECK(kind_of([&] { f_functional(bad, PLConvexFunction::zero(1), fast()); }) ==
        ErrorKind::kDivergent);
  QuadratureConfig tight;
  tight.radius = 1.0;
  CHECK(kind_of([&] { f_functional(stable_ctx(), PLConvexFunction::zero(1), tight); }) ==
        ErrorKind::kNumerical);
  QuadratureConfig neg;
  neg.step = -1;
  CHECK_THROWS_AS(f_functional(stable_ctx(), PLConvexFunction::zero(1), neg), Error);
}

TEST_CASE("quadrature info reports a tail below tolerance") {
  QuadratureInfo info;
  f_functional(stable_ctx(), PLConvexFunction::zero(1), QuadratureConfig{}, &info);
  CHECK(info.tail_bound < 1e-9);
  CHECK(info.decay_rate > 0.0);
  CHECK(info.points > 0);
}

TEST_CASE("ding_functional examples") {
  CHECK(std::abs(ding_functional(toric_ctx(), PLConvexFunction::zero(1), QuadratureConfig{}).d) <
        1e-4);
  const RootSystem a1 = build_root_system("A1");
  const DingValue d0 = ding_functional(stable_ctx(), PLConvexFunction::zero(1), fast());
  const DingValue dr = ding_functional(stable_ctx(), test_ray(a1, 1, Surd()), fast());
  CHECK(d0.d == dr.d);
  CHECK(dr.d == doctest::Approx(dr.l.to_double() + dr.f));
}

TEST_CASE("test_ray examples") {
  const RootSystem a1 = build_root_system("A1");
  const PLConvexFunction z = test_ray(a1, 1, Surd());
  for (const Surd& t : {Surd(-2), Surd(1), Surd(mpq_class(1, 3))}) CHECK(z(Vec{t}).is_zero());
  const Surd lambda(5);
  for (const Surd& t : {Surd(-2), Surd(1), Surd(mpq_class(1, 3))}) {
    CHECK(test_ray(a1, 1, lambda)(Vec{t}) == lambda * t.abs() / Surd::sqrt(2));
  }
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    const RootSystem rs = build_root_system(type);
    for (std::size_t k = 1; k <= rs.rank(); ++k) {
      const Surd l = rand_positive();
      const Vec& w = rs.fundamental_weights[k - 1];
      Surd orbit_max = dot(w, rs.four_rho());
      for (const auto& g : generate_weyl_group(rs)) orbit_max = max(orbit_max, dot(apply(g, w), rs.four_rho()));
      CHECK(test_ray(rs, k, l)(rs.four_rho()) == l * orbit_max);
      CHECK(orbit_max == dot(w, rs.four_rho()));
    }
  }
  CHECK_THROWS_AS(test_ray(a1, 1, Surd(-1)), Error);
  CHECK_THROWS_AS(test_ray(a1, 2, Surd(1)), Error);
  CHECK_THROWS_AS(test_ray(a1, 0, Surd(1)), Error);
}

TEST_CASE("ray_scan examples") {
  std::vector<Surd> grid;
  for (int i = 20; i <= 40; i += 5) grid.push_back(Surd(i));
  const RayScanReport unstable = ray_scan(unstable_ctx(), 1, grid, fast());
  CHECK(unstable.classification == RayClass::kDecreasingUnbounded);
  CHECK(unstable.predicted_slope == rank_one_c1(Surd(mpq_class(3, 2))));
  CHECK(std::abs(unstable.fitted_slope / unstable.predicted_slope.to_double() - 1.0) < 0.1);
  const RayScanReport stable = ray_scan(stable_ctx(), 1, grid, fast());
  CHECK(stable.classification == RayClass::kBoundedBelowGrowing);
  CHECK(stable.fit_points == 3);
  // At P = [-1, 1] 4 rho lies outside the interior of 2P and F diverges.
  const DingContext bad(build_root_system("A1"), symmetric_interval(Surd(1)));
  CHECK(kind_of([&] { ray_scan(bad, 1, grid, fast()); }) == ErrorKind::kDivergent);
  CHECK_THROWS_AS(ray_scan(toric_ctx(), 1, grid, fast()), Error);
  CHECK(message_of([&] { ray_scan(stable_ctx(), 1, {Surd(1)}, fast()); }).find("degenerate") !=
        std::string::npos);
  CHECK_THROWS_AS(ray_scan(stable_ctx(), 1, {Surd(2), Surd(1)}, fast()), Error);
}

TEST_CASE("D along an unstable ray stays below the predicted line plus a constant") {
  const RootSystem a1 = build_root_system("A1");
  const Surd c1 = rank_one_c1(Surd(mpq_class(3, 2)));
  double first = 0.0;
  for (int l = 10; l <= 80; l += 10) {
    const double d = ding_functional(unstable_ctx(), test_ray(a1, 1, Surd(l)), fast()).d;
    const double offset = d - c1.to_double() * l;
    if (l == 10) first = offset;
    CHECK(offset <= first + 1e-3);
  }
}

TEST_CASE("e1_distance examples") {
  CHECK(e1_distance(toric_ctx(), abs_function(), PLConvexFunction::zero(1)) == Surd(4));
  const RootSystem a2 = build_root_system("A2");
  const DingContext ctx(a2, orbit_polytope(a2, {Surd(1), Surd(1)}));
  for (int trial = 0; trial < 3; ++trial) {
    const PLConvexFunction u = random_pl_function(a2), v = random_pl_function(a2);
    CHECK(e1_distance(ctx, u, u).is_zero());
    CHECK(e1_distance(ctx, u, v) == e1_distance(ctx, v, u));
    // For u >= 0 the distance to zero is the energy.
    CHECK(e1_distance(ctx, u, PLConvexFunction::zero(2)) == energy(ctx, u));
  }
}

TEST_CASE("e1_distance triangle inequality") {
  for (const char* t : {"A1", "B2"}) {
    const RootSystem rs = build_root_system(t);
    const DingContext ctx(rs, orbit_polytope(rs, std::vector<Surd>(rs.rank(), Surd(2))));
    for (int trial = 0; trial < 4; ++trial) {
      const PLConvexFunction a = random_pl_function(rs), b = random_pl_function(rs),
                             c = random_pl_function(rs);
      CHECK(e1_distance(ctx, a, c) <= e1_distance(ctx, a, b) + e1_distance(ctx, b, c));
    }
  }
}

TEST_CASE("representation independence") {
  const RootSystem a1 = build_root_system("A1");
  for (int trial = 0; trial < 3; ++trial) {
    const PLConvexFunction u = random_pl_function(a1);
    PLConvexFunction padded = u;
    // Dominated by the zero piece everywhere on 2P = [-4, 4].
    padded.pieces.push_back({{Surd(mpq_class(1, 8))}, Surd(-1)});
    padded.pieces.push_back({{Surd(mpq_class(-1, 8))}, Surd(-1)});
    padded.pieces.push_back(u.pieces.back());
    CHECK(l_functional(stable_ctx(), padded) == l_functional(stable_ctx(), u));
    CHECK(e1_distance(stable_ctx(), padded, PLConvexFunction::zero(1)) ==
          e1_distance(stable_ctx(), u, PLConvexFunction::zero(1)));
    CHECK(std::abs(f_functional(stable_ctx(), padded, fast()) -
                   f_functional(stable_ctx(), u, fast())) <= 1e-12);
  }
}

TEST_CASE("linear_path interpolates values") {
  const RootSystem a2 = build_root_system("A2");
  const HPolytope p2 = dilate(orbit_polytope(a2, {Surd(1), Surd(1)}), Surd(2));
  const PLConvexFunction u0 = random_pl_function(a2), u1 = random_pl_function(a2);
  const Surd t(mpq_class(2, 7));
  const PLConvexFunction ut = linear_path(p2, u0, u1, t);
  for (const auto& y : p2.vertices()) {
    CHECK(ut(y) == (Surd(1) - t) * u0(y) + t * u1(y));
  }
}

TEST_CASE("path_convexity_probe examples") {
  const RootSystem a1 = build_root_system("A1");
  std::vector<Surd> times;
  for (int i = 0; i <= 6; ++i) times.push_back(Surd(mpq_class(i, 6)));
  const PLConvexFunction u = random_pl_function(a1);
  const ConvexityReport same = path_convexity_probe(stable_ctx(), u, u, times, fast());
  CHECK(std::abs(same.max_violation) < 1e-12);
  CHECK(same.pass);
  const ConvexityReport ray = path_convexity_probe(
      stable_ctx(), PLConvexFunction::zero(1), test_ray(a1, 1, Surd(6)), times, fast());
  CHECK(ray.pass);
  for (int trial = 0; trial < 5; ++trial) {
    const ConvexityReport r = path_convexity_probe(
        unstable_ctx(), random_pl_function(a1), random_pl_function(a1), times, fast());
    CHECK(r.max_violation <= 1e-3);
  }
}

TEST_CASE("properness_probe examples") {
  const PropernessReport one =
      properness_probe(stable_ctx(), {PLConvexFunction::zero(1)}, fast());
  CHECK_FALSE(one.c0);
  CHECK(one.min_margin == 0.0);
  CHECK(one.big_c0 == doctest::Approx(-one.ding[0]));
  const RootSystem a1 = build_root_system("A1");
  std::vector<PLConvexFunction> rays;
  for (int l = 1; l <= 40; ++l) rays.push_back(test_ray(a1, 1, Surd(l)));
  const PropernessReport stable = properness_probe(stable_ctx(), rays, fast());
  REQUIRE(stable.c0);
  CHECK(*stable.c0 > 0.0);
  CHECK(stable.ratio);
  const PropernessReport unstable = properness_probe(unstable_ctx(), rays, fast());
  REQUIRE(unstable.c0);
  CHECK(*unstable.c0 <= 0.0);
  CHECK(unstable.best == rays.size() - 1);
}
