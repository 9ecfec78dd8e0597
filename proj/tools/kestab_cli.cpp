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

// Command-line front end over the kestab C API.
//
// Exit codes: check maps the verdict to 0 (Exists), 10 (SemistableBoundary),
// 11 (Unstable), 12 (FutakiObstructed). Every command returns 2 for invalid
// input and 3 for divergent or numerically unresolved integrals.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kestab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitInternal = 1;

struct Options {
  std::string input;
  double step = 0, radius = 0, tail_tol = 0;
  bool json = false;
  std::string function = "zero";
  std::string from = "zero", to = "zero";
  int weight = 1;
  std::string lambda_max = "40";
  int steps = 20;
  std::string xi;
  std::string csv;
};

int exit_code(kestab_status s) {
  switch (s) {
    case KESTAB_OK: return 0;
    case KESTAB_ERR_INVALID_INPUT:
    case KESTAB_ERR_PARSE:
    case KESTAB_ERR_UNSUPPORTED: return kExitInvalid;
    case KESTAB_ERR_DIVERGENT:
    case KESTAB_ERR_NUMERICAL: return kExitNumerical;
    default: return kExitInternal;
  }
}

int report_error(kestab_status s) {
  std::cerr << "kestab: " << kestab_last_error() << "\n";
  return exit_code(s);
}

// A function argument naming a readable file is replaced by its contents.
std::string function_ref(const std::string& ref) {
  std::ifstream in(ref);
  if (!in) return ref;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return g12(j.get<double>());
  return j.dump();
}

void print_summary(const Json& report) {
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() && value.size() > 8) {
      std::cout << key << ": [" << value.size() << " values]\n";
    } else if (value.is_array()) {
      std::cout << key << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) std::cout << (i ? ", " : "") << scalar(value[i]);
      std::cout << "]\n";
    } else if (value.is_object()) {
      for (const auto& [k, v] : value.items()) std::cout << key << "." << k << ": " << scalar(v) << "\n";
    } else {
      std::cout << key << ": " << scalar(value) << "\n";
    }
  }
}

void emit(const char* text, bool json) {
  const Json report = Json::parse(text);
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    print_summary(report);
  }
}

int write_csv(const Json& report, const std::string& path) {
  std::ostringstream out;
  out << "lambda,ding\n";
  for (std::size_t i = 0; i < report["lambda_decimal"].size(); ++i) {
    out << g12(report["lambda_decimal"][i].get<double>()) << ","
        << g12(report["ding"][i].get<double>()) << "\n";
  }
  if (path == "-") {
    std::cout << out.str();
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "kestab: cannot write " << path << "\n";
    return kExitInvalid;
  }
  f << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kahler-Einstein existence criterion and reduced Ding functional explorer"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Problem file (JSON)")->required();
    sub->add_option("--step", o.step, "Quadrature grid step");
    sub->add_option("--radius", o.radius, "Largest truncation radius");
    sub->add_option("--tail-tol", o.tail_tol, "Tail bound tolerance");
    sub->add_flag("--json", o.json, "Emit the JSON report");
  };
  auto* check = app.add_subcommand("check", "Decide the existence criterion");
  common(check);
  auto* ding = app.add_subcommand("ding", "Evaluate L, F, D and the distance to zero");
  common(ding);
  ding->add_option("--function,-f", o.function, "Function name, file, or inline JSON");
  auto* ray = app.add_subcommand("ray-scan", "Evaluate D along a test ray");
  common(ray);
  auto* probe = app.add_subcommand("probe", "Fit the properness inequality on samples");
  common(probe);
  for (auto* sub : {ray, probe}) {
    sub->add_option("--weight,-k", o.weight, "Fundamental weight index (from 1)");
    sub->add_option("--lambda-max", o.lambda_max, "Largest lambda (exact number)");
    sub->add_option("--steps", o.steps, "Number of lambda grid points");
  }
  ray->add_option("--csv", o.csv, "Write lambda,ding series to a file ('-' for stdout)");
  auto* distance = app.add_subcommand("distance", "Exact E1 distance between two functions");
  common(distance);
  auto* convexity = app.add_subcommand("convexity", "Midpoint convexity of D along a linear path");
  common(convexity);
  convexity->add_option("--steps", o.steps, "Number of path intervals");
  for (auto* sub : {distance, convexity}) {
    sub->add_option("--from", o.from, "First function");
    sub->add_option("--to", o.to, "Second function");
  }
  auto* fut = app.add_subcommand("futaki", "Pair the barycenter with a central direction");
  common(fut);
  fut->add_option("--xi", o.xi, "Central vector as a JSON array")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  kestab_problem* raw = nullptr;
  if (kestab_status s = kestab_problem_load(o.input.c_str(), &raw); s != KESTAB_OK) {
    return report_error(s);
  }
  std::unique_ptr<kestab_problem, void (*)(kestab_problem*)> problem(raw, kestab_problem_free);
  if (kestab_status s = kestab_problem_set_quadrature(raw, o.step, o.radius, o.tail_tol);
      s != KESTAB_OK) {
    return report_error(s);
  }

  char* text = nullptr;
  kestab_status s = KESTAB_OK;
  int code = 0;
  if (check->parsed()) {
    kestab_verdict v = KESTAB_EXISTS;
    s = kestab_check(raw, &v, &text);
    switch (v) {
      case KESTAB_EXISTS: code = 0; break;
      case KESTAB_SEMISTABLE_BOUNDARY: code = 10; break;
      case KESTAB_UNSTABLE: code = 11; break;
      case KESTAB_FUTAKI_OBSTRUCTED: code = 12; break;
    }
  } else if (ding->parsed()) {
    s = kestab_ding(raw, function_ref(o.function).c_str(), &text);
  } else if (ray->parsed()) {
    s = kestab_ray_scan(raw, o.weight, o.lambda_max.c_str(), o.steps, &text);
  } else if (probe->parsed()) {
    s = kestab_probe(raw, o.weight, o.lambda_max.c_str(), o.steps, &text);
  } else if (distance->parsed()) {
    s = kestab_distance(raw, function_ref(o.from).c_str(), function_ref(o.to).c_str(), &text);
  } else if (convexity->parsed()) {
    s = kestab_convexity(raw, function_ref(o.from).c_str(), function_ref(o.to).c_str(), o.steps,
                         &text);
  } else if (fut->parsed()) {
    s = kestab_futaki(raw, o.xi.c_str(), &text);
  }
  if (s != KESTAB_OK) return report_error(s);
  std::unique_ptr<char, void (*)(char*)> owned(text, kestab_string_free);
  if (ray->parsed() && !o.csv.empty()) {
    const Json report = Json::parse(text);
    if (int rc = write_csv(report, o.csv); rc != 0) return rc;
    if (o.csv == "-") return 0;
  }
  emit(text, o.json);
  return code;
}
