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

#include "kestab/criterion.hpp"

#include "kestab/error.hpp"
#include "kestab/polynomial.hpp"

namespace kestab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kExists: return "Exists";
    case Verdict::kSemistableBoundary: return "SemistableBoundary";
    case Verdict::kUnstable: return "Unstable";
    case Verdict::kFutakiObstructed: return "FutakiObstructed";
  }
  return "?";
}

Barycenter barycenter(const RootSystem& rs, const HPolytope& p) {
  const PolytopeValidation v = validate_polytope(rs, p);
  if (!v.w_invariant) fail(ErrorKind::kInvalidInput, "polytope is not W-invariant");
  const HPolytope p2 = positive_part(rs, dilate(p, 2));
  const Moments m = weighted_moments(p2, pi_polynomial(rs));
  if (m.mass.sign() <= 0) fail(ErrorKind::kInvalidInput, "2P_+ has zero weighted volume");
  const Surd inv = m.mass.inverse();
  return {m.mass, inv * m.first};
}

StabilityReport check_existence(const RootSystem& rs, const HPolytope& p) {
  const PolytopeValidation v = validate_polytope(rs, p);
  if (!v.w_invariant) fail(ErrorKind::kInvalidInput, "polytope is not W-invariant");
  const Barycenter b = barycenter(rs, p);
  StabilityReport r;
  r.volume = b.volume;
  r.barycenter = b.point;
  r.fine = v.fine;
  r.four_rho_interior = v.four_rho_interior;
  r.central_component = central_component(rs, b.point);
  // 4 rho lies in the root span, so the central parts of b and b - 4 rho agree.
  const Vec diff = b.point - r.central_component - rs.four_rho();
  r.cone = cone_locate(rs, diff);
  if (!is_zero(r.central_component)) {
    r.verdict = Verdict::kFutakiObstructed;
  } else if (r.cone.tag == ConeTag::kInterior) {
    r.verdict = Verdict::kExists;
  } else if (r.cone.tag == ConeTag::kBoundary) {
    r.verdict = Verdict::kSemistableBoundary;
  } else {
    r.verdict = Verdict::kUnstable;
  }
  return r;
}

Surd futaki(const RootSystem& rs, const HPolytope& p, const Vec& xi) {
  if (xi.size() != rs.ambient_dim) {
    fail(ErrorKind::kInvalidInput, "xi has dimension " + std::to_string(xi.size()) +
                                       ", expected " + std::to_string(rs.ambient_dim));
  }
  for (const auto& a : rs.simple_roots) {
    if (!dot(a, xi).is_zero()) fail(ErrorKind::kInvalidInput, "xi is not central");
  }
  return dot(barycenter(rs, p).point, xi);
}

}  // namespace kestab
