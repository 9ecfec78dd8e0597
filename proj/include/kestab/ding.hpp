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

#ifndef KESTAB_DING_HPP
#define KESTAB_DING_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kestab/criterion.hpp"
#include "kestab/linalg.hpp"
#include "kestab/polynomial.hpp"
#include "kestab/polytope.hpp"
#include "kestab/root_system.hpp"

namespace kestab {

struct AffinePiece {
  Vec gradient;
  Surd offset;
};

// u(y) = max_j (<a_j, y> + b_j) on 2P.
struct PLConvexFunction {
  std::vector<AffinePiece> pieces;

  static PLConvexFunction zero(std::size_t dim);

  std::size_t dim() const { return pieces.empty() ? 0 : pieces[0].gradient.size(); }
  Surd operator()(const Vec& y) const;
  double operator()(std::span<const double> y) const;
};

struct QuadratureConfig {
  double step = 0.005;
  double radius = 1000.0;  // largest truncation radius accepted
  double tail_tol = 1e-9;
  double decay_margin = 0.5;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const;
};

// Everything derived from (root system, P) that the functionals share.
class DingContext {
 public:
  DingContext(RootSystem rs, const HPolytope& p);

  const RootSystem& roots() const { return rs_; }
  const HPolytope& polytope() const { return p_; }
  const HPolytope& doubled() const { return p2_; }
  const HPolytope& positive_doubled() const { return p2_plus_; }
  const SparsePolynomial& weight() const { return pi_; }
  const Surd& volume() const { return volume_; }
  const PolytopeValidation& validation() const { return validation_; }
  const StabilityReport& stability() const { return stability_; }

 private:
  RootSystem rs_;
  HPolytope p_;
  HPolytope p2_;
  HPolytope p2_plus_;
  SparsePolynomial pi_;
  Surd volume_;
  PolytopeValidation validation_;
  StabilityReport stability_;
};

struct SubdivisionCell {
  HPolytope region;
  std::size_t piece;  // index into u.pieces
};

// Linear domains of u inside `region`; empty and lower-dimensional cells are
// dropped, ties go to the lowest-index piece.
std::vector<SubdivisionCell> refine_subdivision(const HPolytope& region, const PLConvexFunction& u);

// Throws kInvalidInput naming the violated condition: normalization
// (u(O) = 0 = min u), W-invariance, or O outside 2P.
void validate_pl_function(const RootSystem& rs, const HPolytope& p2, const PLConvexFunction& u);

// psi_u(x) = max over subdivision vertices y of <x, y> - u(y).
class LegendreTransform {
 public:
  LegendreTransform(const HPolytope& p2, const PLConvexFunction& u);

  Surd operator()(const Vec& x) const;
  double operator()(std::span<const double> x) const;
  // A vertex attaining the maximum.
  const Vec& argmax(const Vec& x) const;

  const std::vector<Vec>& points() const { return points_; }
  const std::vector<Surd>& values() const { return values_; }

 private:
  std::vector<Vec> points_;
  std::vector<Surd> values_;
  std::vector<double> flat_points_;
  std::vector<double> flat_values_;
};

Surd legendre_eval(const HPolytope& p2, const PLConvexFunction& u, const Vec& x);
double legendre_eval(const HPolytope& p2, const PLConvexFunction& u, std::span<const double> x);

// Integral of u * pi over 2P_+.
Surd energy(const DingContext& ctx, const PLConvexFunction& u);
Surd l_functional(const DingContext& ctx, const PLConvexFunction& u);

struct QuadratureInfo {
  double radius = 0.0;     // truncation radius actually used
  double decay_rate = 0.0;  // epsilon in the tail bound
  double tail_bound = 0.0;
  std::size_t points = 0;  // grid points inside the truncated chamber
};

double f_functional(const DingContext& ctx, const PLConvexFunction& u, const QuadratureConfig& q,
                    QuadratureInfo* info = nullptr);

struct DingValue {
  Surd l;
  double f = 0.0;
  double d = 0.0;
};
DingValue ding_functional(const DingContext& ctx, const PLConvexFunction& u,
                          const QuadratureConfig& q);

// u(y) = lambda * max_w <w(varpi_k), y>, k counted from 1.
PLConvexFunction test_ray(const RootSystem& rs, std::size_t k, const Surd& lambda);

enum class RayClass { kDecreasingUnbounded, kBoundedBelowGrowing };
const char* to_string(RayClass c);

struct RayScanReport {
  std::size_t weight = 0;
  std::vector<Surd> lambdas;
  std::vector<double> ding;
  std::size_t fit_points = 0;
  double fitted_slope = 0.0;
  double fitted_intercept = 0.0;
  Surd predicted_slope;  // |alpha_k|^2 c_k / 2
  RayClass classification = RayClass::kBoundedBelowGrowing;
};

RayScanReport ray_scan(const DingContext& ctx, std::size_t k, const std::vector<Surd>& lambdas,
                       const QuadratureConfig& q);

// Integral of |u1 - u2| pi over 2P_+.
Surd e1_distance(const DingContext& ctx, const PLConvexFunction& u1, const PLConvexFunction& u2);

// (1 - t) u0 + t u1 with dominated pieces pruned.
PLConvexFunction linear_path(const HPolytope& p2, const PLConvexFunction& u0,
                             const PLConvexFunction& u1, const Surd& t);

struct ConvexityReport {
  std::vector<Surd> times;
  std::vector<double> ding;
  // Largest D(t_i) minus the chord through the neighbouring grid points.
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

ConvexityReport path_convexity_probe(const DingContext& ctx, const PLConvexFunction& u0,
                                     const PLConvexFunction& u1, const std::vector<Surd>& times,
                                     const QuadratureConfig& q, double tolerance = 1e-3);

struct PropernessReport {
  std::vector<double> energy;
  std::vector<double> ding;
  // Slope of the last edge of the lower convex hull of (energy, D); unset
  // when all samples share one energy value.
  std::optional<double> c0;
  double big_c0 = 0.0;  // smallest C_0 making D >= c0 * energy - C_0 hold
  double min_margin = 0.0;
  std::size_t best = 0;  // sample with the smallest D
  // inf over samples with d(u_best, u) >= 1 of (D(u) - D(u_best)) / d(u_best, u).
  std::optional<double> ratio;
};

PropernessReport properness_probe(const DingContext& ctx,
                                  const std::vector<PLConvexFunction>& samples,
                                  const QuadratureConfig& q);

}  // namespace kestab

#endif  // KESTAB_DING_HPP
