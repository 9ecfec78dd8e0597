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

#include "kestab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "kestab/error.hpp"
#include "kestab/problem.hpp"

struct kestab_problem {
  kestab::Problem problem;
};

namespace {

thread_local std::string last_error;

kestab_status status_of(kestab::ErrorKind k) {
  switch (k) {
    case kestab::ErrorKind::kInvalidInput: return KESTAB_ERR_INVALID_INPUT;
    case kestab::ErrorKind::kParse: return KESTAB_ERR_PARSE;
    case kestab::ErrorKind::kUnsupported: return KESTAB_ERR_UNSUPPORTED;
    case kestab::ErrorKind::kDivergent: return KESTAB_ERR_DIVERGENT;
    case kestab::ErrorKind::kNumerical: return KESTAB_ERR_NUMERICAL;
  }
  return KESTAB_ERR_INTERNAL;
}

template <typename Fn>
kestab_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return KESTAB_OK;
  } catch (const kestab::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return KESTAB_ERR_INTERNAL;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const kestab::Json& j, char** report) {
  if (report) *report = duplicate(j.dump(2));
}

const kestab::Problem& deref(const kestab_problem* p) {
  if (!p) kestab::fail(kestab::ErrorKind::kInvalidInput, "null problem handle");
  return p->problem;
}

std::size_t positive(int v, const char* what) {
  if (v <= 0) kestab::fail(kestab::ErrorKind::kInvalidInput, std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

std::string text(const char* s, const char* what) {
  if (!s) kestab::fail(kestab::ErrorKind::kInvalidInput, std::string(what) + " is null");
  return s;
}

kestab_status load(kestab::Problem (*make)(const std::string&), const char* arg,
                   kestab_problem** out) {
  return guarded([&] {
    if (!out) kestab::fail(kestab::ErrorKind::kInvalidInput, "null output pointer");
    *out = nullptr;
    *out = new kestab_problem{make(text(arg, "input"))};
  });
}

kestab::Problem parse_text(const std::string& s) { return kestab::parse_problem(s); }

}  // namespace

extern "C" {

const char* kestab_version(void) { return "1.0.0"; }

const char* kestab_last_error(void) { return last_error.c_str(); }

void kestab_string_free(char* s) { std::free(s); }

kestab_status kestab_problem_load(const char* path, kestab_problem** out) {
  return load(&kestab::load_problem, path, out);
}

kestab_status kestab_problem_parse(const char* json_text, kestab_problem** out) {
  return load(&parse_text, json_text, out);
}

void kestab_problem_free(kestab_problem* problem) { delete problem; }

kestab_status kestab_problem_set_quadrature(kestab_problem* problem, double step, double radius,
                                            double tail_tol) {
  return guarded([&] {
    if (!problem) kestab::fail(kestab::ErrorKind::kInvalidInput, "null problem handle");
    kestab::QuadratureConfig q = problem->problem.quadrature;
    if (step > 0) q.step = step;
    if (radius > 0) q.radius = radius;
    if (tail_tol > 0) q.tail_tol = tail_tol;
    q.validate();
    problem->problem.quadrature = q;
  });
}

kestab_status kestab_check(const kestab_problem* problem, kestab_verdict* verdict, char** report) {
  return guarded([&] {
    const kestab::Problem& p = deref(problem);
    const kestab::StabilityReport r = kestab::check_existence(p.roots, p.polytope);
    if (verdict) {
      switch (r.verdict) {
        case kestab::Verdict::kExists: *verdict = KESTAB_EXISTS; break;
        case kestab::Verdict::kSemistableBoundary: *verdict = KESTAB_SEMISTABLE_BOUNDARY; break;
        case kestab::Verdict::kUnstable: *verdict = KESTAB_UNSTABLE; break;
        case kestab::Verdict::kFutakiObstructed: *verdict = KESTAB_FUTAKI_OBSTRUCTED; break;
      }
    }
    emit(kestab::report_to_json(r, p.roots), report);
  });
}

kestab_status kestab_ding(const kestab_problem* problem, const char* function, char** report) {
  return guarded([&] { emit(kestab::run_ding(deref(problem), text(function, "function")), report); });
}

kestab_status kestab_ray_scan(const kestab_problem* problem, int weight, const char* lambda_max,
                              int steps, char** report) {
  return guarded([&] {
    const kestab::Surd lmax = kestab::Surd::parse(text(lambda_max, "lambda_max"));
    emit(kestab::run_ray_scan(deref(problem), positive(weight, "weight"), lmax,
                              positive(steps, "steps")),
         report);
  });
}

kestab_status kestab_distance(const kestab_problem* problem, const char* from, const char* to,
                              char** report) {
  return guarded([&] {
    emit(kestab::run_distance(deref(problem), text(from, "from"), text(to, "to")), report);
  });
}

kestab_status kestab_probe(const kestab_problem* problem, int weight, const char* lambda_max,
                           int steps, char** report) {
  return guarded([&] {
    const kestab::Surd lmax = kestab::Surd::parse(text(lambda_max, "lambda_max"));
    emit(kestab::run_probe(deref(problem), positive(weight, "weight"), lmax,
                           positive(steps, "steps")),
         report);
  });
}

kestab_status kestab_convexity(const kestab_problem* problem, const char* from, const char* to,
                               int steps, char** report) {
  return guarded([&] {
    emit(kestab::run_convexity(deref(problem), text(from, "from"), text(to, "to"),
                               positive(steps, "steps")),
         report);
  });
}

kestab_status kestab_futaki(const kestab_problem* problem, const char* xi, char** report) {
  return guarded([&] {
    kestab::Json j;
    try {
      j = kestab::Json::parse(text(xi, "xi"));
    } catch (const nlohmann::json::parse_error& e) {
      kestab::fail(kestab::ErrorKind::kParse, std::string("xi: ") + e.what());
    }
    emit(kestab::run_futaki(deref(problem), kestab::parse_vector(j, "xi")), report);
  });
}

}  // extern "C"
