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

#include "kestab/polytope.hpp"

#include <algorithm>
#include <set>

#include "kestab/error.hpp"
#include "kestab/root_system.hpp"

namespace kestab {
namespace {

int compare_halfspaces(const Halfspace& a, const Halfspace& b) {
  const int c = structural_compare(a.normal, b.normal);
  if (c != 0) return c;
  return Surd::structural_compare(a.offset, b.offset);
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool satisfies(const Halfspace& h, const Vec& y) { return dot(h.normal, y) <= h.offset; }

// Canonicalizes, drops trivial rows and keeps the tightest offset per normal.
// Returns false when a row is infeasible on its own (0 <= negative).
bool prepare(std::size_t dim, std::vector<Halfspace>& hs) {
  std::vector<Halfspace> out;
  for (const auto& h : hs) {
    if (h.normal.size() != dim) {
      fail(ErrorKind::kInvalidInput, "inequality normal has dimension " +
                                         std::to_string(h.normal.size()) + ", expected " +
                                         std::to_string(dim));
    }
    if (is_zero(h.normal)) {
      if (h.offset.sign() < 0) return false;
      continue;
    }
    out.push_back(canonical(h));
  }
  std::sort(out.begin(), out.end(),
            [](const Halfspace& a, const Halfspace& b) { return compare_halfspaces(a, b) < 0; });
  std::vector<Halfspace> unique;
  for (auto& h : out) {
    if (!unique.empty() && structural_compare(unique.back().normal, h.normal) == 0) {
      if (h.offset < unique.back().offset) unique.back().offset = h.offset;
    } else {
      unique.push_back(std::move(h));
    }
  }
  hs = std::move(unique);
  return true;
}

VertexSet raw_vertices(std::size_t dim, const std::vector<Halfspace>& hs) {
  std::set<Vec, VecLess> found;
  for_each_subset(hs.size(), dim, [&](const std::vector<std::size_t>& idx) {
    Matrix a;
    Vec b;
    for (auto i : idx) {
      a.push_back(hs[i].normal);
      b.push_back(hs[i].offset);
    }
    auto x = solve(std::move(a), std::move(b));
    if (!x) return;
    for (const auto& h : hs) {
      if (!satisfies(h, *x)) return;
    }
    found.insert(std::move(*x));
  });
  return {found.begin(), found.end()};
}

bool has_recession_ray(std::size_t dim, const std::vector<Halfspace>& hs) {
  bool unbounded = false;
  for_each_subset(hs.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    if (unbounded) return;
    Matrix rows;
    for (auto i : idx) rows.push_back(hs[i].normal);
    const auto ns = null_space(rows, dim);
    if (ns.size() != 1) return;
    for (int s : {1, -1}) {
      const Vec d = Surd(s) * ns[0];
      bool ray = true;
      for (const auto& h : hs) {
        if (dot(h.normal, d).sign() > 0) {
          ray = false;
          break;
        }
      }
      if (ray) unbounded = true;
    }
  });
  return unbounded;
}

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Halfspace canonical(const Halfspace& h) {
  for (const auto& x : h.normal) {
    if (x.is_zero()) continue;
    const Surd scale = x.abs().inverse();
    return {scale * h.normal, scale * h.offset};
  }
  return h;
}

std::optional<HPolytope> HPolytope::try_from_inequalities(std::size_t dim,
                                                          std::vector<Halfspace> hs,
                                                          bool known_bounded) {
  if (dim == 0) fail(ErrorKind::kInvalidInput, "polytope dimension must be positive");
  if (!prepare(dim, hs)) return std::nullopt;
  Matrix normals;
  for (const auto& h : hs) normals.push_back(h.normal);
  if (rank(normals) < dim) fail(ErrorKind::kInvalidInput, "polytope is unbounded");
  if (!known_bounded && has_recession_ray(dim, hs)) {
    fail(ErrorKind::kInvalidInput, "polytope is unbounded");
  }
  VertexSet verts = raw_vertices(dim, hs);
  if (affine_dimension(verts) != static_cast<int>(dim)) return std::nullopt;
  HPolytope p;
  p.dim_ = dim;
  p.vertices_ = std::move(verts);
  p.finish(std::move(hs));
  return p;
}

HPolytope HPolytope::from_inequalities(std::size_t dim, std::vector<Halfspace> hs) {
  auto p = try_from_inequalities(dim, std::move(hs));
  if (!p) fail(ErrorKind::kInvalidInput, "polytope is empty or lower-dimensional");
  return std::move(*p);
}

HPolytope HPolytope::from_vertices(std::vector<Vec> points) {
  if (points.empty()) fail(ErrorKind::kInvalidInput, "no vertices given");
  const std::size_t dim = points[0].size();
  for (const auto& p : points) {
    if (p.size() != dim) fail(ErrorKind::kInvalidInput, "vertices have mixed dimensions");
  }
  std::sort(points.begin(), points.end(), VecLess{});
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Vec& a, const Vec& b) { return structural_compare(a, b) == 0; }),
               points.end());
  if (affine_dimension(points) != static_cast<int>(dim)) {
    fail(ErrorKind::kInvalidInput, "vertices span a lower-dimensional set");
  }
  std::vector<Halfspace> hs;
  for_each_subset(points.size(), dim, [&](const std::vector<std::size_t>& idx) {
    Matrix diffs;
    for (std::size_t k = 1; k < idx.size(); ++k) diffs.push_back(points[idx[k]] - points[idx[0]]);
    const auto ns = null_space(diffs, dim);
    if (ns.size() != 1) return;
    const Vec& n = ns[0];
    const Surd c = dot(n, points[idx[0]]);
    bool le = true, ge = true;
    for (const auto& q : points) {
      const int s = (dot(n, q) - c).sign();
      le &= s <= 0;
      ge &= s >= 0;
    }
    if (le) hs.push_back({n, c});
    if (ge) hs.push_back({-n, -c});
  });
  return *try_from_inequalities(dim, std::move(hs), true);
}

void HPolytope::finish(std::vector<Halfspace> candidates) {
  facets_.clear();
  incidence_.clear();
  for (auto& h : candidates) {
    std::vector<std::size_t> tight;
    VertexSet pts;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (dot(h.normal, vertices_[v]) == h.offset) {
        tight.push_back(v);
        pts.push_back(vertices_[v]);
      }
    }
    if (pts.size() >= dim_ && affine_dimension(pts) == static_cast<int>(dim_) - 1) {
      facets_.push_back(std::move(h));
      incidence_.push_back(std::move(tight));
    }
  }
}

bool HPolytope::contains(const Vec& y) const {
  for (const auto& h : facets_) {
    if (!satisfies(h, y)) return false;
  }
  return true;
}

bool HPolytope::contains_in_interior(const Vec& y) const {
  for (const auto& h : facets_) {
    if (dot(h.normal, y) >= h.offset) return false;
  }
  return true;
}

Vec HPolytope::vertex_centroid() const {
  Vec c = zeros(dim_);
  for (const auto& v : vertices_) c = c + v;
  return Surd(1) / Surd(static_cast<long>(vertices_.size())) * c;
}

Surd HPolytope::support(const Vec& x) const {
  Surd best = dot(x, vertices_[0]);
  for (std::size_t i = 1; i < vertices_.size(); ++i) best = max(best, dot(x, vertices_[i]));
  return best;
}

bool operator==(const HPolytope& a, const HPolytope& b) {
  if (a.dim_ != b.dim_ || a.facets_.size() != b.facets_.size()) return false;
  for (std::size_t i = 0; i < a.facets_.size(); ++i) {
    if (compare_halfspaces(a.facets_[i], b.facets_[i]) != 0) return false;
  }
  return true;
}

VertexSet enumerate_vertices(const HPolytope& p) { return p.vertices(); }

std::vector<Halfspace> chamber_halfspaces(const RootSystem& rs) {
  std::vector<Halfspace> hs;
  for (const auto& a : rs.simple_roots) hs.push_back({-a, Surd()});
  return hs;
}

HPolytope positive_part(const RootSystem& rs, const HPolytope& p) {
  if (rs.ambient_dim != p.dim()) fail(ErrorKind::kInvalidInput, "polytope dimension mismatch");
  if (rs.is_toric()) return p;
  auto q = intersect(p, chamber_halfspaces(rs));
  if (!q) fail(ErrorKind::kInvalidInput, "polytope misses the positive chamber");
  return std::move(*q);
}

HPolytope dilate(const HPolytope& p, const Surd& factor) {
  if (factor.sign() <= 0) fail(ErrorKind::kInvalidInput, "dilation factor must be positive");
  HPolytope q = p;
  for (auto& h : q.facets_) h.offset *= factor;
  for (auto& v : q.vertices_) v = factor * v;
  return q;
}

HPolytope apply_orthogonal(const HPolytope& p, const Matrix& w) {
  std::vector<Halfspace> hs;
  for (const auto& h : p.facets()) hs.push_back({apply(w, h.normal), h.offset});
  prepare(p.dim(), hs);
  HPolytope q;
  q.dim_ = p.dim();
  for (const auto& v : p.vertices()) q.vertices_.push_back(apply(w, v));
  std::sort(q.vertices_.begin(), q.vertices_.end(), VecLess{});
  q.finish(std::move(hs));
  return q;
}

std::optional<HPolytope> intersect(const HPolytope& p, const std::vector<Halfspace>& extra) {
  std::vector<Halfspace> hs = p.facets();
  hs.insert(hs.end(), extra.begin(), extra.end());
  return HPolytope::try_from_inequalities(p.dim(), std::move(hs), true);
}

PolytopeValidation validate_polytope(const RootSystem& rs, const HPolytope& p) {
  if (rs.ambient_dim != p.dim()) {
    fail(ErrorKind::kInvalidInput, "polytope has dimension " + std::to_string(p.dim()) +
                                       " but the root system has " +
                                       std::to_string(rs.ambient_dim));
  }
  PolytopeValidation v;
  v.w_invariant = true;
  for (const auto& w : rs.weyl_generators) {
    if (!(apply_orthogonal(p, w) == p)) {
      v.w_invariant = false;
      break;
    }
  }
  v.contains_origin_interior = p.contains_in_interior(zeros(p.dim()));
  v.four_rho_interior = dilate(p, 2).contains_in_interior(rs.four_rho());
  std::vector<std::size_t> count(p.vertices().size(), 0);
  for (const auto& f : p.facet_vertices()) {
    for (auto idx : f) ++count[idx];
  }
  v.fine = std::all_of(count.begin(), count.end(), [&](std::size_t c) { return c == p.dim(); });
  return v;
}

namespace {

// Pulling triangulation of the face spanned by `face` (sorted vertex indices,
// affine dimension k): cone the lowest-index vertex over the subfaces that
// miss it.
void pull(const HPolytope& p, const std::vector<std::size_t>& face, std::size_t k,
          std::vector<std::vector<std::size_t>>& out) {
  if (face.size() == k + 1) {
    out.push_back(face);
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& fv : p.facet_vertices()) {
    std::vector<std::size_t> sub = intersect_sorted(face, fv);
    if (sub.size() < k || sub.size() == face.size() || sub.front() == apex) continue;
    VertexSet pts;
    for (auto i : sub) pts.push_back(p.vertices()[i]);
    if (affine_dimension(pts) == static_cast<int>(k) - 1) subfaces.insert(std::move(sub));
  }
  for (const auto& sub : subfaces) {
    std::vector<std::vector<std::size_t>> cells;
    pull(p, sub, k - 1, cells);
    for (auto& c : cells) {
      c.insert(c.begin(), apex);
      out.push_back(std::move(c));
    }
  }
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// Integral over the standard simplex {s >= 0, sum s <= 1} of s^shift * g,
// where shift adds one to coordinate `extra` (or nothing when extra < 0).
Surd standard_simplex_integral(const SparsePolynomial& g, int extra) {
  const std::size_t d = g.num_vars();
  Surd total;
  for (const auto& [e, c] : g.terms()) {
    mpz_class num = 1;
    unsigned deg = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const unsigned k = e[j] + (static_cast<int>(j) == extra ? 1u : 0u);
      num *= factorial(k);
      deg += k;
    }
    total += c * Surd(mpq_class(num, factorial(deg + static_cast<unsigned>(d))));
  }
  return total;
}

struct Pullback {
  Vec origin;
  std::vector<Vec> columns;
  Surd abs_det;
};

Pullback pullback(const Simplex& s) {
  const std::size_t d = s.points.size() - 1;
  if (d == 0 || s.points[0].size() != d) {
    fail(ErrorKind::kInvalidInput, "simplex must have dim + 1 points");
  }
  Pullback pb;
  pb.origin = s.points[0];
  for (std::size_t j = 1; j <= d; ++j) pb.columns.push_back(s.points[j] - s.points[0]);
  pb.abs_det = determinant(pb.columns).abs();
  if (pb.abs_det.is_zero()) fail(ErrorKind::kInvalidInput, "degenerate simplex");
  return pb;
}

}  // namespace

std::vector<Simplex> triangulate(const HPolytope& p) {
  const std::size_t n = p.dim();
  if (p.vertices().size() == n + 1) return {Simplex{p.vertices()}};
  const Vec center = p.vertex_centroid();
  std::vector<Simplex> cells;
  for (const auto& fv : p.facet_vertices()) {
    std::vector<std::vector<std::size_t>> boundary;
    pull(p, fv, n - 1, boundary);
    for (const auto& b : boundary) {
      Simplex s;
      s.points.push_back(center);
      for (auto i : b) s.points.push_back(p.vertices()[i]);
      cells.push_back(std::move(s));
    }
  }
  return cells;
}

Surd simplex_volume(const Simplex& s) {
  const std::size_t d = s.points.size() - 1;
  Matrix cols;
  for (std::size_t j = 1; j <= d; ++j) cols.push_back(s.points[j] - s.points[0]);
  return determinant(cols).abs() / Surd(mpq_class(factorial(static_cast<unsigned>(d))));
}

Surd volume(const HPolytope& p) {
  Surd v;
  for (const auto& s : triangulate(p)) v += simplex_volume(s);
  return v;
}

Surd integrate_over_simplex(const Simplex& s, const SparsePolynomial& f) {
  const Pullback pb = pullback(s);
  const SparsePolynomial g = f.compose_affine(pb.origin, pb.columns);
  return pb.abs_det * standard_simplex_integral(g, -1);
}

Surd monomial_simplex_integral(const Simplex& s, const SparsePolynomial::Exponent& exponent) {
  return integrate_over_simplex(s, SparsePolynomial::monomial(exponent));
}

Surd integrate_polynomial(const HPolytope& p, const SparsePolynomial& f) {
  if (f.num_vars() != p.dim()) fail(ErrorKind::kInvalidInput, "integrand dimension mismatch");
  Surd total;
  for (const auto& s : triangulate(p)) total += integrate_over_simplex(s, f);
  return total;
}

Moments weighted_moments(const HPolytope& p, const SparsePolynomial& weight) {
  if (weight.num_vars() != p.dim()) fail(ErrorKind::kInvalidInput, "weight dimension mismatch");
  const std::size_t n = p.dim();
  Moments m{Surd(), zeros(n)};
  for (const auto& s : triangulate(p)) {
    const Pullback pb = pullback(s);
    const SparsePolynomial g = weight.compose_affine(pb.origin, pb.columns);
    const Surd i0 = standard_simplex_integral(g, -1);
    Vec ij(n);
    for (std::size_t j = 0; j < n; ++j) ij[j] = standard_simplex_integral(g, static_cast<int>(j));
    m.mass += pb.abs_det * i0;
    for (std::size_t i = 0; i < n; ++i) {
      Surd yi = pb.origin[i] * i0;
      for (std::size_t j = 0; j < n; ++j) yi += pb.columns[j][i] * ij[j];
      m.first[i] += pb.abs_det * yi;
    }
  }
  return m;
}

}  // namespace kestab
