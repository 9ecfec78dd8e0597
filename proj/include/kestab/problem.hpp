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

#ifndef KESTAB_PROBLEM_HPP
#define KESTAB_PROBLEM_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kestab/criterion.hpp"
#include "kestab/ding.hpp"

namespace kestab {

// A problem file:
//   {"root_system": {"type": "A2", "central_dim": 0}
//                 | {"simple_roots": [[...]], "central_dim": k,
//                    "allow_noncrystallographic": false}
//                 | {"central_dim": n},                       (torus)
//    "polytope": {"inequalities": [{"normal": [...], "offset": "c"}]}
//              | {"vertices": [[...]]}
//              | {"weyl_orbit": [[...]]},  (points in fundamental-weight
//                                           coordinates, then central ones)
//    "functions": {"name": {"pieces": [{"gradient": [...], "offset": "0"}]}
//                        | {"ray": {"weight": 1, "lambda": "2"}}},
//    "quadrature": {"step": 0.005, "radius": 1000, "tail_tol": 1e-9,
//                   "decay_margin": 0.5, "threads": 0}}
// Exact numbers are integers or strings such as "3/2", "1.25", "sqrt(2)/2".
struct Problem {
  RootSystem roots;
  HPolytope polytope;
  std::map<std::string, PLConvexFunction> functions;
  QuadratureConfig quadrature;
};

using Json = nlohmann::ordered_json;

Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

// `where` prefixes error messages.
Surd parse_number(const Json& j, const std::string& where);
Vec parse_vector(const Json& j, const std::string& where);
PLConvexFunction parse_pl_function(const Json& j, const RootSystem& rs, const std::string& where);

// A function name from the problem, "zero", or inline JSON text of a function.
PLConvexFunction resolve_function(const Problem& p, std::string_view ref);

Json to_json(const Surd& s);
Json to_json(const Vec& v);
Json decimal_json(const Vec& v);

Json report_to_json(const StabilityReport& r, const RootSystem& rs);
StabilityReport report_from_json(const Json& j);
Json report_to_json(const RayScanReport& r);
RayScanReport ray_scan_from_json(const Json& j);

// Evenly spaced grid lambda_max * i / steps, i = 1..steps.
std::vector<Surd> lambda_grid(const Surd& lambda_max, std::size_t steps);

Json run_check(const Problem& p);
Json run_ding(const Problem& p, std::string_view function);
Json run_ray_scan(const Problem& p, std::size_t weight, const Surd& lambda_max, std::size_t steps);
Json run_distance(const Problem& p, std::string_view from, std::string_view to);
// Samples: every named function in the problem plus rays on the lambda grid.
Json run_probe(const Problem& p, std::size_t weight, const Surd& lambda_max, std::size_t steps);
Json run_convexity(const Problem& p, std::string_view from, std::string_view to, std::size_t steps);
Json run_futaki(const Problem& p, const Vec& xi);

}  // namespace kestab

#endif  // KESTAB_PROBLEM_HPP
