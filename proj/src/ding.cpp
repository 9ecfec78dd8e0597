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

#include "kestab/ding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <thread>

#include "kestab/error.hpp"

namespace kestab {
namespace {

struct PieceLess {
  bool operator()(const std::pair<Vec, Surd>& a, const std::pair<Vec, Surd>& b) const {
    const int c = structural_compare(a.first, b.first);
    if (c != 0) return c < 0;
    return structural_compare({a.second}, {b.second}) < 0;
  }
};

// Neumaier-compensated running sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void check_function(const PLConvexFunction& u, std::size_t dim) {
  if (u.pieces.empty()) fail(ErrorKind::kInvalidInput, "PL function has no pieces");
  for (const auto& p : u.pieces) {
    if (p.gradient.size() != dim) {
      fail(ErrorKind::kInvalidInput, "PL function gradient has dimension " +
                                         std::to_string(p.gradient.size()) + ", expected " +
                                         std::to_string(dim));
    }
  }
}

std::vector<Vec> subdivision_vertices(const HPolytope& region, const PLConvexFunction& u) {
  std::set<Vec, VecLess> pts;
  for (const auto& c : refine_subdivision(region, u)) {
    pts.insert(c.region.vertices().begin(), c.region.vertices().end());
  }
  return {pts.begin(), pts.end()};
}

// Integral of (<g, y> + c) * weight over the polytope.
Surd affine_moment(const HPolytope& p, const SparsePolynomial& weight, const Vec& g,
                   const Surd& c) {
  const Moments m = weighted_moments(p, weight);
  return dot(g, m.first) + c * m.mass;
}

std::vector<std::vector<double>> vertex_doubles(const std::vector<Vec>& pts) {
  std::vector<std::vector<double>> out;
  for (const auto& p : pts) out.push_back(to_doubles(p));
  return out;
}

double dot_d(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Directions on the unit sphere inside the closed chamber.
std::vector<std::vector<double>> chamber_directions(const RootSystem& rs) {
  const std::size_t n = rs.ambient_dim;
  std::vector<std::vector<double>> roots;
  for (const auto& a : rs.simple_roots) roots.push_back(to_doubles(a));
  auto in_chamber = [&](const std::vector<double>& x) {
    for (const auto& a : roots) {
      if (dot_d(a, x) < -1e-12) return false;
    }
    return true;
  };
  auto normalized = [](std::vector<double> x) {
    const double r = std::sqrt(dot_d(x, x));
    for (auto& v : x) v /= r;
    return x;
  };
  std::vector<std::vector<double>> dirs;
  for (const auto& w : rs.fundamental_weights) dirs.push_back(normalized(to_doubles(w)));
  for (const auto& c : rs.central_basis) {
    auto d = normalized(to_doubles(c));
    dirs.push_back(d);
    for (auto& v : d) v = -v;
    dirs.push_back(d);
  }
  if (n == 1) {
    for (double s : {1.0, -1.0}) {
      if (in_chamber({s})) dirs.push_back({s});
    }
    return dirs;
  }
  const std::size_t m = n == 2 ? 512 : n == 3 ? 64 : n == 4 ? 16 : 6;
  std::vector<std::size_t> idx(n - 1);
  std::vector<double> x(n);
  for (std::size_t axis = 0; axis < n; ++axis) {
    for (double side : {1.0, -1.0}) {
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < n; ++j) {
          x[j] = j == axis ? side : -1.0 + 2.0 * static_cast<double>(idx[k++]) / m;
        }
        if (in_chamber(x)) dirs.push_back(normalized(x));
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] > m) idx[j++] = 0;
        if (j == idx.size()) break;
      }
    }
  }
  return dirs;
}

// log of the integral over r >= radius of r^(n-1) e^(-eps r).
double log_radial_tail(std::size_t n, double eps, double radius) {
  double sum = 0.0;
  double fact_ratio = 1.0;  // (n-1)!/k! for k = n-1 down to 0
  for (std::size_t k = n; k-- > 0;) {
    sum += fact_ratio * std::pow(radius, static_cast<double>(k)) /
           std::pow(eps, static_cast<double>(n - k));
    fact_ratio *= static_cast<double>(k);
  }
  return -eps * radius + std::log(sum);
}

}  // namespace

PLConvexFunction PLConvexFunction::zero(std::size_t dim) {
  return PLConvexFunction{{AffinePiece{zeros(dim), Surd()}}};
}

Surd PLConvexFunction::operator()(const Vec& y) const {
  if (pieces.empty()) fail(ErrorKind::kInvalidInput, "PL function has no pieces");
  Surd best = dot(pieces[0].gradient, y) + pieces[0].offset;
  for (std::size_t j = 1; j < pieces.size(); ++j) {
    best = max(best, dot(pieces[j].gradient, y) + pieces[j].offset);
  }
  return best;
}

double PLConvexFunction::operator()(std::span<const double> y) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : pieces) {
    double v = p.offset.to_double();
    for (std::size_t i = 0; i < y.size(); ++i) v += p.gradient[i].to_double() * y[i];
    best = std::max(best, v);
  }
  return best;
}

void QuadratureConfig::validate() const {
  if (!(step > 0.0)) fail(ErrorKind::kInvalidInput, "quadrature step must be positive");
  if (!(radius > 0.0)) fail(ErrorKind::kInvalidInput, "quadrature radius must be positive");
  if (!(tail_tol > 0.0)) fail(ErrorKind::kInvalidInput, "tail tolerance must be positive");
  if (!(decay_margin > 0.0 && decay_margin <= 1.0)) {
    fail(ErrorKind::kInvalidInput, "decay margin must lie in (0, 1]");
  }
}

DingContext::DingContext(RootSystem rs, const HPolytope& p)
    : rs_(std::move(rs)),
      p_(p),
      p2_(dilate(p, 2)),
      p2_plus_(positive_part(rs_, p2_)),
      pi_(pi_polynomial(rs_)),
      validation_(validate_polytope(rs_, p)),
      stability_(check_existence(rs_, p)) {
  volume_ = stability_.volume;
}

std::vector<SubdivisionCell> refine_subdivision(const HPolytope& region,
                                                const PLConvexFunction& u) {
  check_function(u, region.dim());
  std::vector<SubdivisionCell> cells;
  for (std::size_t j = 0; j < u.pieces.size(); ++j) {
    const AffinePiece& pj = u.pieces[j];
    bool duplicate = false;
    for (std::size_t i = 0; i < j && !duplicate; ++i) {
      duplicate = u.pieces[i].gradient == pj.gradient && u.pieces[i].offset == pj.offset;
    }
    if (duplicate) continue;
    // Cut one halfspace at a time so each step works on a small polytope.
    std::optional<HPolytope> cell = region;
    for (std::size_t i = 0; i < u.pieces.size() && cell; ++i) {
      if (i == j) continue;
      const AffinePiece& pi = u.pieces[i];
      Halfspace h{pi.gradient - pj.gradient, pj.offset - pi.offset};
      bool cuts = false;
      for (const auto& v : cell->vertices()) {
        if (dot(h.normal, v) > h.offset) {
          cuts = true;
          break;
        }
      }
      if (cuts) cell = intersect(*cell, {std::move(h)});
    }
    if (cell) cells.push_back({std::move(*cell), j});
  }
  return cells;
}

void validate_pl_function(const RootSystem& rs, const HPolytope& p2, const PLConvexFunction& u) {
  check_function(u, p2.dim());
  const Vec origin = zeros(p2.dim());
  if (!p2.contains(origin)) fail(ErrorKind::kInvalidInput, "origin is not in 2P");
  const Surd at_origin = u(origin);
  if (!at_origin.is_zero()) {
    fail(ErrorKind::kInvalidInput, "normalization violated: u(O) = " + at_origin.str());
  }
  const std::vector<Vec> verts = subdivision_vertices(p2, u);
  for (const auto& v : verts) {
    if (u(v).sign() < 0) {
      fail(ErrorKind::kInvalidInput, "normalization violated: u < 0 at " + format(v));
    }
  }
  // u o w <= u at the subdivision vertices gives u o w <= u on 2P, and
  // applying this to the involution w gives equality.
  for (const auto& w : rs.weyl_generators) {
    for (const auto& v : verts) {
      if (u(apply(w, v)) != u(v)) {
        fail(ErrorKind::kInvalidInput, "W-invariance violated at " + format(v));
      }
    }
  }
}

LegendreTransform::LegendreTransform(const HPolytope& p2, const PLConvexFunction& u) {
  points_ = subdivision_vertices(p2, u);
  for (const auto& y : points_) {
    values_.push_back(u(y));
    const auto d = to_doubles(y);
    flat_points_.insert(flat_points_.end(), d.begin(), d.end());
    flat_values_.push_back(values_.back().to_double());
  }
}

Surd LegendreTransform::operator()(const Vec& x) const {
  const Vec& y = argmax(x);
  const auto it = std::find(points_.begin(), points_.end(), y);
  return dot(x, y) - values_[static_cast<std::size_t>(it - points_.begin())];
}

const Vec& LegendreTransform::argmax(const Vec& x) const {
  std::size_t best = 0;
  Surd best_value = dot(x, points_[0]) - values_[0];
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const Surd v = dot(x, points_[i]) - values_[i];
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  return points_[best];
}

double LegendreTransform::operator()(std::span<const double> x) const {
  const std::size_t n = x.size();
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < flat_values_.size(); ++i) {
    const double* y = flat_points_.data() + i * n;
    double v = -flat_values_[i];
    for (std::size_t j = 0; j < n; ++j) v += x[j] * y[j];
    best = std::max(best, v);
  }
  return best;
}

Surd legendre_eval(const HPolytope& p2, const PLConvexFunction& u, const Vec& x) {
  if (x.size() != p2.dim()) fail(ErrorKind::kInvalidInput, "x has the wrong dimension");
  return LegendreTransform(p2, u)(x);
}

double legendre_eval(const HPolytope& p2, const PLConvexFunction& u, std::span<const double> x) {
  if (x.size() != p2.dim()) fail(ErrorKind::kInvalidInput, "x has the wrong dimension");
  return LegendreTransform(p2, u)(x);
}

Surd energy(const DingContext& ctx, const PLConvexFunction& u) {
  validate_pl_function(ctx.roots(), ctx.doubled(), u);
  Surd total;
  for (const auto& c : refine_subdivision(ctx.positive_doubled(), u)) {
    const AffinePiece& p = u.pieces[c.piece];
    total += affine_moment(c.region, ctx.weight(), p.gradient, p.offset);
  }
  return total;
}

Surd l_functional(const DingContext& ctx, const PLConvexFunction& u) {
  return energy(ctx, u) / ctx.volume() - u(ctx.roots().four_rho());
}

double f_functional(const DingContext& ctx, const PLConvexFunction& u, const QuadratureConfig& q,
                    QuadratureInfo* info) {
  q.validate();
  const RootSystem& rs = ctx.roots();
  validate_pl_function(rs, ctx.doubled(), u);
  if (!ctx.validation().four_rho_interior) {
    fail(ErrorKind::kDivergent, "F diverges: 4 rho is not in the interior of 2P");
  }
  const std::size_t n = rs.ambient_dim;
  const LegendreTransform psi(ctx.doubled(), u);
  const Vec four_rho_exact = rs.four_rho();
  const std::vector<double> four_rho = to_doubles(four_rho_exact);
  const double u_at_four_rho = u(four_rho_exact).to_double();

  // Tail bound: psi_u(x) >= v_2P(x) - max_2P u, each root factor is <= 1/4,
  // and v_2P(x) - <4 rho, x> >= eps |x| on the chamber.
  const auto corners = vertex_doubles(ctx.doubled().vertices());
  double max_u = 0.0;
  for (const auto& v : ctx.doubled().vertices()) max_u = std::max(max_u, u(v).to_double());
  double min_gap = std::numeric_limits<double>::infinity();
  for (const auto& d : chamber_directions(rs)) {
    double support = -std::numeric_limits<double>::infinity();
    for (const auto& c : corners) support = std::max(support, dot_d(c, d));
    min_gap = std::min(min_gap, support - dot_d(four_rho, d));
  }
  if (!(min_gap > 0.0)) fail(ErrorKind::kDivergent, "F diverges: no linear decay in the chamber");
  const double eps = q.decay_margin * min_gap;
  const double log_sphere = std::log(2.0) + 0.5 * static_cast<double>(n) * std::log(std::numbers::pi) -
                            std::lgamma(0.5 * static_cast<double>(n));
  const double log_prefactor = -static_cast<double>(rs.positive_roots.size()) * std::log(4.0) +
                               (max_u - u_at_four_rho) + log_sphere;
  auto log_tail = [&](double r) { return log_prefactor + log_radial_tail(n, eps, r); };
  const double log_tol = std::log(q.tail_tol);
  if (log_tail(q.radius) > log_tol) {
    fail(ErrorKind::kNumerical, "tail bound needs a truncation radius above " +
                                    std::to_string(q.radius));
  }
  double lo = 0.0, hi = q.radius;
  if (log_tail(1e-9) <= log_tol) hi = 1e-9;
  for (int it = 0; it < 100 && hi - lo > 1e-6 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (log_tail(mid) <= log_tol ? hi : lo) = mid;
  }
  const double radius = hi;

  // Bounding box of chamber intersected with the ball, from generator signs.
  std::vector<double> box_lo(n, 0.0), box_hi(n, 0.0);
  auto widen = [&](const std::vector<double>& g) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g[j] > 1e-15) box_hi[j] = radius;
      if (g[j] < -1e-15) box_lo[j] = -radius;
    }
  };
  for (const auto& w : rs.fundamental_weights) widen(to_doubles(w));
  for (const auto& c : rs.central_basis) {
    auto g = to_doubles(c);
    widen(g);
    for (auto& v : g) v = -v;
    widen(g);
  }
  const double h = q.step;
  std::vector<std::size_t> counts(n);
  double total_points = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    counts[j] = static_cast<std::size_t>(std::ceil((box_hi[j] - box_lo[j]) / h));
    total_points *= static_cast<double>(std::max<std::size_t>(counts[j], 1));
  }
  if (total_points > 4e10) {
    fail(ErrorKind::kNumerical, "quadrature grid too large; increase the step");
  }

  std::vector<std::vector<double>> roots;
  for (const auto& a : rs.simple_roots) roots.push_back(to_doubles(a));
  std::vector<std::vector<double>> positive;
  for (const auto& a : rs.positive_roots) positive.push_back(to_doubles(a));
  const double r2 = radius * radius;

  struct Slab {
    double sum = 0.0;
    std::size_t points = 0;
  };
  std::vector<Slab> slabs(counts[0]);
  auto run_slab = [&](std::size_t s) {
    Accumulator acc;
    std::size_t pts = 0;
    std::vector<double> x(n);
    std::vector<std::size_t> idx(n, 0);
    x[0] = box_lo[0] + (static_cast<double>(s) + 0.5) * h;
    while (true) {
      for (std::size_t j = 1; j < n; ++j) x[j] = box_lo[j] + (static_cast<double>(idx[j]) + 0.5) * h;
      bool inside = dot_d(x, x) <= r2;
      for (std::size_t i = 0; inside && i < roots.size(); ++i) inside = dot_d(roots[i], x) >= 0.0;
      if (inside) {
        const double e = psi(x) - dot_d(four_rho, x) + u_at_four_rho;
        double j_factor = 1.0;
        for (const auto& a : positive) {
          const double f = -0.5 * std::expm1(-2.0 * dot_d(a, x));
          j_factor *= f * f;
        }
        acc.add(std::exp(-e) * j_factor);
        ++pts;
      }
      std::size_t j = 1;
      while (j < n && ++idx[j] >= counts[j]) idx[j++] = 0;
      if (j >= n) break;
    }
    slabs[s] = {acc.value(), pts};
  };
  unsigned threads = q.threads ? q.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, slabs.size()));
  if (threads <= 1) {
    for (std::size_t s = 0; s < slabs.size(); ++s) run_slab(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t s = t; s < slabs.size(); s += threads) run_slab(s);
      });
    }
    for (auto& th : pool) th.join();
  }
  Accumulator total;
  std::size_t points = 0;
  for (const auto& s : slabs) {
    total.add(s.sum);
    points += s.points;
  }
  const double integral = total.value() * std::pow(h, static_cast<double>(n));
  if (!(integral > 0.0)) fail(ErrorKind::kNumerical, "quadrature produced a zero integral");
  if (info) *info = {radius, eps, std::exp(log_tail(radius)), points};
  return -std::log(integral);
}

DingValue ding_functional(const DingContext& ctx, const PLConvexFunction& u,
                          const QuadratureConfig& q) {
  DingValue v;
  v.f = f_functional(ctx, u, q);
  v.l = l_functional(ctx, u);
  v.d = v.l.to_double() + v.f;
  return v;
}

PLConvexFunction test_ray(const RootSystem& rs, std::size_t k, const Surd& lambda) {
  if (rs.is_toric()) fail(ErrorKind::kInvalidInput, "test rays need a nonempty root system");
  if (k < 1 || k > rs.rank()) {
    fail(ErrorKind::kInvalidInput, "weight index " + std::to_string(k) + " outside 1.." +
                                       std::to_string(rs.rank()));
  }
  if (lambda.sign() < 0) fail(ErrorKind::kInvalidInput, "lambda must be nonnegative");
  if (lambda.is_zero()) return PLConvexFunction::zero(rs.ambient_dim);
  PLConvexFunction u;
  for (const auto& w : weyl_orbit(rs, rs.fundamental_weights[k - 1])) {
    u.pieces.push_back({lambda * w, Surd()});
  }
  return u;
}

const char* to_string(RayClass c) {
  return c == RayClass::kDecreasingUnbounded ? "decreasing_unbounded" : "bounded_below_growing";
}

RayScanReport ray_scan(const DingContext& ctx, std::size_t k, const std::vector<Surd>& lambdas,
                       const QuadratureConfig& q) {
  const RootSystem& rs = ctx.roots();
  if (rs.is_toric()) fail(ErrorKind::kInvalidInput, "ray scan needs a nonempty root system");
  if (k < 1 || k > rs.rank()) {
    fail(ErrorKind::kInvalidInput, "weight index " + std::to_string(k) + " outside 1.." +
                                       std::to_string(rs.rank()));
  }
  if (lambdas.size() < 2) fail(ErrorKind::kInvalidInput, "degenerate fit: need at least two lambdas");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i].sign() < 0 || (i > 0 && !(lambdas[i - 1] < lambdas[i]))) {
      fail(ErrorKind::kInvalidInput, "lambda grid must be nonnegative and strictly increasing");
    }
  }
  RayScanReport r;
  r.weight = k;
  r.lambdas = lambdas;
  for (const auto& l : lambdas) r.ding.push_back(ding_functional(ctx, test_ray(rs, k, l), q).d);
  const std::size_t n = lambdas.size();
  r.fit_points = std::max<std::size_t>(2, (n + 1) / 2);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = n - r.fit_points; i < n; ++i) {
    const double x = lambdas[i].to_double();
    sx += x;
    sy += r.ding[i];
    sxx += x * x;
    sxy += x * r.ding[i];
  }
  const double m = static_cast<double>(r.fit_points);
  r.fitted_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  r.fitted_intercept = (sy - r.fitted_slope * sx) / m;
  const Vec diff = ctx.stability().barycenter - ctx.stability().central_component - rs.four_rho();
  r.predicted_slope = dot(rs.fundamental_weights[k - 1], diff);
  r.classification =
      r.fitted_slope < 0.0 ? RayClass::kDecreasingUnbounded : RayClass::kBoundedBelowGrowing;
  return r;
}

Surd e1_distance(const DingContext& ctx, const PLConvexFunction& u1, const PLConvexFunction& u2) {
  validate_pl_function(ctx.roots(), ctx.doubled(), u1);
  validate_pl_function(ctx.roots(), ctx.doubled(), u2);
  const auto cells1 = refine_subdivision(ctx.positive_doubled(), u1);
  const auto cells2 = refine_subdivision(ctx.positive_doubled(), u2);
  Surd total;
  for (const auto& c1 : cells1) {
    for (const auto& c2 : cells2) {
      const AffinePiece& p1 = u1.pieces[c1.piece];
      const AffinePiece& p2 = u2.pieces[c2.piece];
      const Vec g = p1.gradient - p2.gradient;
      const Surd c = p1.offset - p2.offset;
      auto cell = intersect(c1.region, c2.region.facets());
      if (!cell) continue;
      if (is_zero(g)) {
        total += c.abs() * affine_moment(*cell, ctx.weight(), zeros(g.size()), 1);
        continue;
      }
      // Split along the zero set of the difference.
      if (auto pos = intersect(*cell, {{-g, c}})) {
        total += affine_moment(*pos, ctx.weight(), g, c);
      }
      if (auto neg = intersect(*cell, {{g, -c}})) {
        total -= affine_moment(*neg, ctx.weight(), g, c);
      }
    }
  }
  return total;
}

PLConvexFunction linear_path(const HPolytope& p2, const PLConvexFunction& u0,
                             const PLConvexFunction& u1, const Surd& t) {
  if (t.sign() < 0 || t > Surd(1)) fail(ErrorKind::kInvalidInput, "path time must lie in [0, 1]");
  check_function(u0, p2.dim());
  check_function(u1, p2.dim());
  if (t.is_zero()) return u0;
  if (t == Surd(1)) return u1;
  // The pair (a, b) is active exactly where a is active for u0 and b for u1,
  // so only pairs whose cells overlap in a full-dimensional set survive.
  const Surd s = Surd(1) - t;
  const auto cells0 = refine_subdivision(p2, u0);
  const auto cells1 = refine_subdivision(p2, u1);
  PLConvexFunction sum;
  std::set<std::pair<Vec, Surd>, PieceLess> seen;
  for (const auto& c0 : cells0) {
    for (const auto& c1 : cells1) {
      if (!intersect(c0.region, c1.region.facets())) continue;
      const AffinePiece& a = u0.pieces[c0.piece];
      const AffinePiece& b = u1.pieces[c1.piece];
      AffinePiece piece{s * a.gradient + t * b.gradient, s * a.offset + t * b.offset};
      if (seen.insert({piece.gradient, piece.offset}).second) sum.pieces.push_back(std::move(piece));
    }
  }
  return sum;
}

ConvexityReport path_convexity_probe(const DingContext& ctx, const PLConvexFunction& u0,
                                     const PLConvexFunction& u1, const std::vector<Surd>& times,
                                     const QuadratureConfig& q, double tolerance) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i].sign() < 0 || times[i] > Surd(1) || (i > 0 && !(times[i - 1] < times[i]))) {
      fail(ErrorKind::kInvalidInput, "path times must be strictly increasing in [0, 1]");
    }
  }
  ConvexityReport r;
  r.times = times;
  r.tolerance = tolerance;
  for (const auto& t : times) {
    r.ding.push_back(ding_functional(ctx, linear_path(ctx.doubled(), u0, u1, t), q).d);
  }
  r.max_violation = times.size() < 3 ? 0.0 : -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < times.size(); ++i) {
    const double t0 = times[i - 1].to_double();
    const double t1 = times[i].to_double();
    const double t2 = times[i + 1].to_double();
    const double chord = ((t2 - t1) * r.ding[i - 1] + (t1 - t0) * r.ding[i + 1]) / (t2 - t0);
    r.max_violation = std::max(r.max_violation, r.ding[i] - chord);
  }
  r.pass = r.max_violation <= tolerance;
  return r;
}

PropernessReport properness_probe(const DingContext& ctx,
                                  const std::vector<PLConvexFunction>& samples,
                                  const QuadratureConfig& q) {
  if (samples.empty()) fail(ErrorKind::kInvalidInput, "properness probe needs samples");
  PropernessReport r;
  for (const auto& u : samples) {
    r.energy.push_back(energy(ctx, u).to_double());
    r.ding.push_back(ding_functional(ctx, u, q).d);
  }
  const std::size_t n = samples.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return r.energy[a] != r.energy[b] ? r.energy[a] < r.energy[b] : r.ding[a] < r.ding[b];
  });
  // Lower convex hull by the monotone chain.
  std::vector<std::size_t> hull;
  for (auto i : order) {
    if (!hull.empty() && r.energy[hull.back()] == r.energy[i]) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull.back();
      const double cross = (r.energy[b] - r.energy[a]) * (r.ding[i] - r.ding[a]) -
                           (r.ding[b] - r.ding[a]) * (r.energy[i] - r.energy[a]);
      if (cross > 0.0) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }
  double slope = 0.0;
  if (hull.size() >= 2) {
    const std::size_t a = hull[hull.size() - 2], b = hull.back();
    slope = (r.ding[b] - r.ding[a]) / (r.energy[b] - r.energy[a]);
    r.c0 = slope;
  }
  r.big_c0 = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) r.big_c0 = std::max(r.big_c0, slope * r.energy[i] - r.ding[i]);
  r.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    r.min_margin = std::min(r.min_margin, r.ding[i] - slope * r.energy[i] + r.big_c0);
  }
  r.best = static_cast<std::size_t>(std::min_element(r.ding.begin(), r.ding.end()) - r.ding.begin());
  for (std::size_t i = 0; i < n; ++i) {
    if (i == r.best) continue;
    const Surd d = e1_distance(ctx, samples[r.best], samples[i]);
    if (d < Surd(1)) continue;
    const double ratio = (r.ding[i] - r.ding[r.best]) / d.to_double();
    r.ratio = r.ratio ? std::min(*r.ratio, ratio) : ratio;
  }
  return r;
}

}  // namespace kestab
