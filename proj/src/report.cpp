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

#include "kestab/error.hpp"
#include "kestab/problem.hpp"

namespace kestab {
namespace {

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::kExists, Verdict::kSemistableBoundary, Verdict::kUnstable,
                    Verdict::kFutakiObstructed}) {
    if (s == to_string(v)) return v;
  }
  fail(ErrorKind::kParse, "unknown verdict '" + s + "'");
}

ConeTag cone_tag_from_string(const std::string& s) {
  for (ConeTag t : {ConeTag::kInterior, ConeTag::kBoundary, ConeTag::kOutside, ConeTag::kNotInSpan}) {
    if (s == to_string(t)) return t;
  }
  fail(ErrorKind::kParse, "unknown cone location '" + s + "'");
}

Vec vector_from_json(const Json& j, const std::string& where) { return parse_vector(j, where); }

Json quadrature_json(const QuadratureConfig& q, const QuadratureInfo& info) {
  return Json{{"step", q.step},
              {"radius", info.radius},
              {"decay_rate", info.decay_rate},
              {"tail_bound", info.tail_bound},
              {"points", info.points}};
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

DingContext context(const Problem& p) { return DingContext(p.roots, p.polytope); }

}  // namespace

Json to_json(const Surd& s) { return s.str(); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json decimal_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

Json report_to_json(const StabilityReport& r, const RootSystem& rs) {
  std::string claim = "criterion not satisfied";
  if (r.verdict == Verdict::kExists) {
    claim = r.fine ? "criterion satisfied"
                   : "criterion satisfied, fineness false: existence claim qualified";
  }
  return Json{{"root_system", rs.label},
              {"ambient_dim", rs.ambient_dim},
              {"verdict", to_string(r.verdict)},
              {"volume", to_json(r.volume)},
              {"volume_decimal", r.volume.to_double()},
              {"barycenter", to_json(r.barycenter)},
              {"barycenter_decimal", decimal_json(r.barycenter)},
              {"four_rho", to_json(rs.four_rho())},
              {"central_component", to_json(r.central_component)},
              {"cone_location", to_string(r.cone.tag)},
              {"cone_coefficients", to_json(r.cone.coefficients)},
              {"cone_coefficients_decimal", decimal_json(r.cone.coefficients)},
              {"fine", r.fine},
              {"four_rho_interior", r.four_rho_interior},
              {"existence_claim", claim}};
}

StabilityReport report_from_json(const Json& j) {
  try {
    StabilityReport r;
    r.volume = parse_number(j.at("volume"), "volume");
    r.barycenter = vector_from_json(j.at("barycenter"), "barycenter");
    r.central_component = vector_from_json(j.at("central_component"), "central_component");
    r.cone.tag = cone_tag_from_string(j.at("cone_location").get<std::string>());
    r.cone.coefficients = vector_from_json(j.at("cone_coefficients"), "cone_coefficients");
    r.fine = j.at("fine").get<bool>();
    r.four_rho_interior = j.at("four_rho_interior").get<bool>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParse, std::string("report: ") + e.what());
  }
}

Json report_to_json(const RayScanReport& r) {
  return Json{{"weight", r.weight},
              {"lambda", to_json(r.lambdas)},
              {"lambda_decimal", decimal_json(r.lambdas)},
              {"ding", r.ding},
              {"fit_points", r.fit_points},
              {"fitted_slope", r.fitted_slope},
              {"fitted_intercept", r.fitted_intercept},
              {"predicted_slope", to_json(r.predicted_slope)},
              {"predicted_slope_decimal", r.predicted_slope.to_double()},
              {"classification", to_string(r.classification)}};
}

RayScanReport ray_scan_from_json(const Json& j) {
  try {
    RayScanReport r;
    r.weight = j.at("weight").get<std::size_t>();
    r.lambdas = vector_from_json(j.at("lambda"), "lambda");
    r.ding = j.at("ding").get<std::vector<double>>();
    r.fit_points = j.at("fit_points").get<std::size_t>();
    r.fitted_slope = j.at("fitted_slope").get<double>();
    r.fitted_intercept = j.at("fitted_intercept").get<double>();
    r.predicted_slope = parse_number(j.at("predicted_slope"), "predicted_slope");
    const std::string c = j.at("classification").get<std::string>();
    if (c == to_string(RayClass::kDecreasingUnbounded)) {
      r.classification = RayClass::kDecreasingUnbounded;
    } else if (c == to_string(RayClass::kBoundedBelowGrowing)) {
      r.classification = RayClass::kBoundedBelowGrowing;
    } else {
      fail(ErrorKind::kParse, "unknown classification '" + c + "'");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParse, std::string("ray scan report: ") + e.what());
  }
}

std::vector<Surd> lambda_grid(const Surd& lambda_max, std::size_t steps) {
  if (lambda_max.sign() <= 0) fail(ErrorKind::kInvalidInput, "lambda-max must be positive");
  if (steps == 0) fail(ErrorKind::kInvalidInput, "steps must be positive");
  std::vector<Surd> grid;
  for (std::size_t i = 1; i <= steps; ++i) {
    grid.push_back(lambda_max * Surd(static_cast<long>(i)) / Surd(static_cast<long>(steps)));
  }
  return grid;
}

Json run_check(const Problem& p) { return report_to_json(check_existence(p.roots, p.polytope), p.roots); }

Json run_ding(const Problem& p, std::string_view function) {
  const DingContext ctx = context(p);
  const PLConvexFunction u = resolve_function(p, function);
  QuadratureInfo info;
  const double f = f_functional(ctx, u, p.quadrature, &info);
  const Surd l = l_functional(ctx, u);
  const Surd d0 = e1_distance(ctx, u, PLConvexFunction::zero(p.roots.ambient_dim));
  return Json{{"L", to_json(l)},
              {"L_decimal", l.to_double()},
              {"F", f},
              {"D", l.to_double() + f},
              {"distance_to_zero", to_json(d0)},
              {"distance_to_zero_decimal", d0.to_double()},
              {"quadrature", quadrature_json(p.quadrature, info)}};
}

Json run_ray_scan(const Problem& p, std::size_t weight, const Surd& lambda_max, std::size_t steps) {
  if (p.roots.is_toric()) fail(ErrorKind::kInvalidInput, "ray scan needs a nonempty root system");
  const DingContext ctx = context(p);
  return report_to_json(ray_scan(ctx, weight, lambda_grid(lambda_max, steps), p.quadrature));
}

Json run_distance(const Problem& p, std::string_view from, std::string_view to) {
  const DingContext ctx = context(p);
  const Surd d = e1_distance(ctx, resolve_function(p, from), resolve_function(p, to));
  return Json{{"from", std::string(from)},
              {"to", std::string(to)},
              {"distance", to_json(d)},
              {"distance_decimal", d.to_double()}};
}

Json run_probe(const Problem& p, std::size_t weight, const Surd& lambda_max, std::size_t steps) {
  const DingContext ctx = context(p);
  std::vector<PLConvexFunction> samples;
  std::vector<std::string> names;
  for (const auto& [name, u] : p.functions) {
    samples.push_back(u);
    names.push_back(name);
  }
  if (!p.roots.is_toric()) {
    for (const auto& l : lambda_grid(lambda_max, steps)) {
      samples.push_back(test_ray(p.roots, weight, l));
      names.push_back("ray(" + std::to_string(weight) + "," + l.str() + ")");
    }
  }
  const PropernessReport r = properness_probe(ctx, samples, p.quadrature);
  return Json{{"samples", names},
              {"energy", r.energy},
              {"ding", r.ding},
              {"c0", optional_json(r.c0)},
              {"c0_positive", r.c0 && *r.c0 > 0.0},
              {"C0", r.big_c0},
              {"min_margin", r.min_margin},
              {"best", names[r.best]},
              {"ratio", optional_json(r.ratio)}};
}

Json run_convexity(const Problem& p, std::string_view from, std::string_view to,
                   std::size_t steps) {
  if (steps < 2) fail(ErrorKind::kInvalidInput, "convexity probe needs at least two steps");
  const DingContext ctx = context(p);
  std::vector<Surd> times;
  for (std::size_t i = 0; i <= steps; ++i) {
    times.push_back(Surd(static_cast<long>(i)) / Surd(static_cast<long>(steps)));
  }
  const ConvexityReport r = path_convexity_probe(ctx, resolve_function(p, from),
                                                 resolve_function(p, to), times, p.quadrature);
  Json t = Json::array();
  for (const auto& x : r.times) t.push_back(x.str());
  return Json{{"from", std::string(from)}, {"to", std::string(to)},
              {"t", t},                    {"ding", r.ding},
              {"max_violation", r.max_violation}, {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

Json run_futaki(const Problem& p, const Vec& xi) {
  const Surd v = futaki(p.roots, p.polytope, xi);
  return Json{{"xi", to_json(xi)}, {"futaki", to_json(v)}, {"futaki_decimal", v.to_double()}};
}

}  // namespace kestab
