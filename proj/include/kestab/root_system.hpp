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

#ifndef KESTAB_ROOT_SYSTEM_HPP
#define KESTAB_ROOT_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kestab/linalg.hpp"

namespace kestab {

// Root data of a reductive group in a fixed orthonormal basis of the weight
// space. The first coordinates span the roots, the trailing central_dim
// coordinates (for the built-in Cartan types) are the center.
//
// Standard constructions normalize every simple factor so that its long roots
// have squared length 2. The existence verdict does not depend on this choice,
// but Ding functional values shift by an additive constant under rescaling.
struct RootSystem {
  std::size_t ambient_dim = 0;
  std::size_t central_dim = 0;
  std::string label;
  std::vector<Vec> simple_roots;
  std::vector<Vec> positive_roots;  // sorted by height
  Vec two_rho;
  std::vector<Vec> fundamental_weights;  // <alpha_i, w_j> = |alpha_i|^2/2 delta_ij
  std::vector<Matrix> weyl_generators;   // simple reflections
  std::vector<Vec> central_basis;        // spans the orthogonal complement of the roots

  std::size_t rank() const { return simple_roots.size(); }
  bool is_toric() const { return simple_roots.empty(); }
  Vec four_rho() const { return Surd(2) * two_rho; }
};

struct RootSystemSpec {
  // Cartan label such as "A2", "B3", "G2", "A1xA1"; empty for a torus or for
  // explicit simple roots.
  std::string type;
  std::vector<Vec> simple_roots;
  std::size_t central_dim = 0;
  bool allow_noncrystallographic = false;
};

RootSystem build_root_system(const RootSystemSpec& spec);
RootSystem build_root_system(const std::string& type, std::size_t central_dim = 0);
RootSystem torus(std::size_t dim);

// Full Weyl group as orthogonal matrices, identity first. Throws once the
// closure exceeds max_order elements.
std::vector<Matrix> generate_weyl_group(const RootSystem& rs, std::size_t max_order = 100000);

// Orbit of a vector under the Weyl group, deduplicated and sorted.
std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& v);

// Coefficients of the projection of v to the root span in the simple-root basis.
Vec simple_coordinates(const RootSystem& rs, const Vec& v);
// Component of v orthogonal to every root.
Vec central_component(const RootSystem& rs, const Vec& v);

enum class ConeTag { kInterior, kBoundary, kOutside, kNotInSpan };

struct ConeLocation {
  ConeTag tag = ConeTag::kNotInSpan;
  Vec coefficients;  // simple-root coefficients; empty when not in span
};

// Locates v relative to the cone spanned by the positive roots. Exact sign
// tests only.
ConeLocation cone_locate(const RootSystem& rs, const Vec& v);

const char* to_string(ConeTag tag);

}  // namespace kestab

#endif  // KESTAB_ROOT_SYSTEM_HPP
