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

#ifndef KESTAB_POLYTOPE_HPP
#define KESTAB_POLYTOPE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "kestab/linalg.hpp"
#include "kestab/polynomial.hpp"

namespace kestab {

struct RootSystem;

// {y : <normal, y> <= offset}
struct Halfspace {
  Vec normal;
  Surd offset;
};

// Scales the normal so its leading nonzero entry is +1 or -1.
Halfspace canonical(const Halfspace& h);

using VertexSet = std::vector<Vec>;

// Bounded, full-dimensional polytope in H-representation with exact vertex
// and facet-vertex incidence data. Facets are canonical, irredundant and sorted,
// so two polytopes are equal iff their facet lists are equal.
class HPolytope {
 public:
  // Throws on empty, unbounded or lower-dimensional input.
  static HPolytope from_inequalities(std::size_t dim, std::vector<Halfspace> halfspaces);
  // Returns nullopt for empty or lower-dimensional input; throws when unbounded
  // (the check is skipped when known_bounded is set).
  static std::optional<HPolytope> try_from_inequalities(std::size_t dim,
                                                        std::vector<Halfspace> halfspaces,
                                                        bool known_bounded = false);
  // Convex hull of a full-dimensional point set.
  static HPolytope from_vertices(std::vector<Vec> points);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const VertexSet& vertices() const { return vertices_; }
  // Indices into vertices() of the vertices on each facet.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return incidence_; }

  bool contains(const Vec& y) const;
  bool contains_in_interior(const Vec& y) const;
  Vec vertex_centroid() const;
  // Maximum of <x, y> over the polytope.
  Surd support(const Vec& x) const;

  friend bool operator==(const HPolytope& a, const HPolytope& b);

 private:
  HPolytope() = default;
  void finish(std::vector<Halfspace> candidates);

  std::size_t dim_ = 0;
  std::vector<Halfspace> facets_;
  VertexSet vertices_;
  std::vector<std::vector<std::size_t>> incidence_;

  friend HPolytope dilate(const HPolytope& p, const Surd& factor);
  friend HPolytope apply_orthogonal(const HPolytope& p, const Matrix& w);
};

// Integration cell: dim + 1 affinely independent points.
struct Simplex {
  std::vector<Vec> points;
};

VertexSet enumerate_vertices(const HPolytope& p);

// The chamber {<alpha_i, y> >= 0} as halfspaces (empty for a torus).
std::vector<Halfspace> chamber_halfspaces(const RootSystem& rs);
HPolytope positive_part(const RootSystem& rs, const HPolytope& p);
HPolytope dilate(const HPolytope& p, const Surd& factor);
// Image of p under an orthogonal map (e.g. a Weyl group element).
HPolytope apply_orthogonal(const HPolytope& p, const Matrix& w);
std::optional<HPolytope> intersect(const HPolytope& p, const std::vector<Halfspace>& extra);

struct PolytopeValidation {
  bool w_invariant = false;
  bool contains_origin_interior = false;
  bool four_rho_interior = false;  // 4 rho in the interior of 2P
  bool fine = false;               // every vertex on exactly dim facets
};
PolytopeValidation validate_polytope(const RootSystem& rs, const HPolytope& p);

// Interior-point fan over a pulling triangulation of the boundary.
std::vector<Simplex> triangulate(const HPolytope& p);
Surd simplex_volume(const Simplex& s);
Surd volume(const HPolytope& p);

Surd monomial_simplex_integral(const Simplex& s, const SparsePolynomial::Exponent& exponent);
Surd integrate_over_simplex(const Simplex& s, const SparsePolynomial& f);
Surd integrate_polynomial(const HPolytope& p, const SparsePolynomial& f);

// Integral of w and of y * w over a polytope, sharing one triangulation.
struct Moments {
  Surd mass;
  Vec first;
};
Moments weighted_moments(const HPolytope& p, const SparsePolynomial& weight);

}  // namespace kestab

#endif  // KESTAB_POLYTOPE_HPP
