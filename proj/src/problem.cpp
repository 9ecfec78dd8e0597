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

#include "kestab/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "kestab/error.hpp"

namespace kestab {
namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(ErrorKind::kParse, where + ": " + what);
}

// Runs fn, prefixing any error with the location.
template <typename Fn>
auto located(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    fail(e.kind(), where + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(where, e.what());
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t parse_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    parse_fail(where, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

double parse_real(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return located(where, [&] { return Surd::parse(j.get<std::string>()).to_double(); });
  parse_fail(where, "expected a number");
}

RootSystem parse_root_system(const Json& j) {
  const std::string where = "root_system";
  if (!j.is_object()) parse_fail(where, "expected an object");
  RootSystemSpec spec;
  if (j.contains("central_dim")) spec.central_dim = parse_count(j["central_dim"], where + ".central_dim");
  if (j.contains("type")) {
    if (!j["type"].is_string()) parse_fail(where + ".type", "expected a string");
    spec.type = j["type"].get<std::string>();
  }
  if (j.contains("simple_roots")) {
    const Json& roots = j["simple_roots"];
    if (!roots.is_array()) parse_fail(where + ".simple_roots", "expected an array");
    for (std::size_t i = 0; i < roots.size(); ++i) {
      spec.simple_roots.push_back(
          parse_vector(roots[i], where + ".simple_roots[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("allow_noncrystallographic")) {
    if (!j["allow_noncrystallographic"].is_boolean()) {
      parse_fail(where + ".allow_noncrystallographic", "expected a boolean");
    }
    spec.allow_noncrystallographic = j["allow_noncrystallographic"].get<bool>();
  }
  return located(where, [&] { return build_root_system(spec); });
}

HPolytope parse_polytope(const Json& j, const RootSystem& rs) {
  const std::string where = "polytope";
  if (!j.is_object()) parse_fail(where, "expected an object");
  const std::size_t n = rs.ambient_dim;
  auto check_dim = [&](const Vec& v, const std::string& at) {
    if (v.size() != n) {
      fail(ErrorKind::kInvalidInput, at + ": dimension " + std::to_string(v.size()) +
                                         " does not match the root system dimension " +
                                         std::to_string(n));
    }
  };
  if (j.contains("inequalities")) {
    const Json& rows = j["inequalities"];
    if (!rows.is_array()) parse_fail(where + ".inequalities", "expected an array");
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string at = where + ".inequalities[" + std::to_string(i) + "]";
      Halfspace h{parse_vector(require(rows[i], "normal", at), at + ".normal"),
                  parse_number(require(rows[i], "offset", at), at + ".offset")};
      check_dim(h.normal, at + ".normal");
      hs.push_back(std::move(h));
    }
    return located(where, [&] { return HPolytope::from_inequalities(n, std::move(hs)); });
  }
  std::vector<Vec> points;
  if (j.contains("vertices")) {
    const Json& rows = j["vertices"];
    if (!rows.is_array()) parse_fail(where + ".vertices", "expected an array");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string at = where + ".vertices[" + std::to_string(i) + "]";
      points.push_back(parse_vector(rows[i], at));
      check_dim(points.back(), at);
    }
  } else if (j.contains("weyl_orbit")) {
    const Json& rows = j["weyl_orbit"];
    if (!rows.is_array()) parse_fail(where + ".weyl_orbit", "expected an array");
    std::set<Vec, VecLess> all;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string at = where + ".weyl_orbit[" + std::to_string(i) + "]";
      const Vec c = parse_vector(rows[i], at);
      check_dim(c, at);
      Vec y = zeros(n);
      for (std::size_t k = 0; k < rs.rank(); ++k) y = y + c[k] * rs.fundamental_weights[k];
      for (std::size_t k = 0; k < rs.central_basis.size(); ++k) {
        y = y + c[rs.rank() + k] * rs.central_basis[k];
      }
      for (auto& v : weyl_orbit(rs, y)) all.insert(std::move(v));
    }
    points.assign(all.begin(), all.end());
  } else {
    parse_fail(where, "expected 'inequalities', 'vertices' or 'weyl_orbit'");
  }
  return located(where, [&] { return HPolytope::from_vertices(std::move(points)); });
}

QuadratureConfig parse_quadrature(const Json& j) {
  const std::string where = "quadrature";
  if (!j.is_object()) parse_fail(where, "expected an object");
  QuadratureConfig q;
  if (j.contains("step")) q.step = parse_real(j["step"], where + ".step");
  if (j.contains("radius")) q.radius = parse_real(j["radius"], where + ".radius");
  if (j.contains("tail_tol")) q.tail_tol = parse_real(j["tail_tol"], where + ".tail_tol");
  if (j.contains("decay_margin")) {
    q.decay_margin = parse_real(j["decay_margin"], where + ".decay_margin");
  }
  if (j.contains("threads")) {
    q.threads = static_cast<unsigned>(parse_count(j["threads"], where + ".threads"));
  }
  located(where, [&] { q.validate(); });
  return q;
}

}  // namespace

Surd parse_number(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Surd(mpq_class(std::to_string(j.get<unsigned long long>())));
    return Surd(mpq_class(std::to_string(j.get<long long>())));
  }
  if (j.is_string()) return located(where, [&] { return Surd::parse(j.get<std::string>()); });
  if (j.is_number_float()) {
    parse_fail(where, "floating-point literal; write exact values as strings such as \"1/10\"");
  }
  parse_fail(where, "expected an integer or a string");
}

Vec parse_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(parse_number(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

PLConvexFunction parse_pl_function(const Json& j, const RootSystem& rs, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  if (j.contains("ray")) {
    const Json& ray = j["ray"];
    const std::size_t k = parse_count(require(ray, "weight", where + ".ray"), where + ".ray.weight");
    const Surd lambda = parse_number(require(ray, "lambda", where + ".ray"), where + ".ray.lambda");
    return located(where, [&] { return test_ray(rs, k, lambda); });
  }
  const Json& pieces = require(j, "pieces", where);
  if (!pieces.is_array() || pieces.empty()) parse_fail(where + ".pieces", "expected a nonempty array");
  PLConvexFunction u;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string at = where + ".pieces[" + std::to_string(i) + "]";
    AffinePiece p{parse_vector(require(pieces[i], "gradient", at), at + ".gradient"),
                  parse_number(require(pieces[i], "offset", at), at + ".offset")};
    if (p.gradient.size() != rs.ambient_dim) {
      fail(ErrorKind::kInvalidInput, at + ".gradient: dimension " +
                                         std::to_string(p.gradient.size()) + ", expected " +
                                         std::to_string(rs.ambient_dim));
    }
    u.pieces.push_back(std::move(p));
  }
  return u;
}

Problem parse_problem(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail("problem", e.what());
  }
  if (!j.is_object()) parse_fail("problem", "expected a JSON object");
  RootSystem rs = parse_root_system(require(j, "root_system", "problem"));
  HPolytope p = parse_polytope(require(j, "polytope", "problem"), rs);
  std::map<std::string, PLConvexFunction> functions;
  if (j.contains("functions")) {
    const Json& fs = j["functions"];
    if (!fs.is_object()) parse_fail("functions", "expected an object");
    for (const auto& [name, body] : fs.items()) {
      functions.emplace(name, parse_pl_function(body, rs, "functions." + name));
    }
  }
  QuadratureConfig q;
  if (j.contains("quadrature")) q = parse_quadrature(j["quadrature"]);
  return Problem{std::move(rs), std::move(p), std::move(functions), q};
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kInvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

PLConvexFunction resolve_function(const Problem& p, std::string_view ref) {
  const std::string name(ref);
  if (auto it = p.functions.find(name); it != p.functions.end()) return it->second;
  if (name == "zero") return PLConvexFunction::zero(p.roots.ambient_dim);
  const auto first = name.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && name[first] == '{') {
    Json j;
    try {
      j = Json::parse(name);
    } catch (const nlohmann::json::parse_error& e) {
      parse_fail("function", e.what());
    }
    return parse_pl_function(j, p.roots, "function");
  }
  fail(ErrorKind::kInvalidInput, "unknown function '" + name + "'");
}

}  // namespace kestab
