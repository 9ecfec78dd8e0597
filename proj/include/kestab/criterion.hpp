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

#ifndef KESTAB_CRITERION_HPP
#define KESTAB_CRITERION_HPP

#include "kestab/linalg.hpp"
#include "kestab/polytope.hpp"
#include "kestab/root_system.hpp"

namespace kestab {

enum class Verdict { kExists, kSemistableBoundary, kUnstable, kFutakiObstructed };

const char* to_string(Verdict v);

struct Barycenter {
  Surd volume;  // integral of pi over 2P_+
  Vec point;
};

// pi-weighted barycenter of 2P_+. Throws unless P is W-invariant and 2P_+
// carries positive mass.
Barycenter barycenter(const RootSystem& rs, const HPolytope& p);

struct StabilityReport {
  Surd volume;
  Vec barycenter;
  Vec central_component;
  // Location of the root-span part of b - 4 rho relative to the positive root
  // cone. For a torus the cone is {0} and the tag is kInterior.
  ConeLocation cone;
  bool fine = false;
  bool four_rho_interior = false;
  Verdict verdict = Verdict::kUnstable;

  // Sufficiency is only established for fine polytopes.
  bool existence_qualified() const { return verdict == Verdict::kExists && !fine; }
};

StabilityReport check_existence(const RootSystem& rs, const HPolytope& p);

// <b(2P_+), xi> for a central direction xi.
Surd futaki(const RootSystem& rs, const HPolytope& p, const Vec& xi);

}  // namespace kestab

#endif  // KESTAB_CRITERION_HPP
