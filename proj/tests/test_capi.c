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

// Exercises the shared library through its C header only.

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "kestab.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: EXPECT(%s)\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

static const char* kStable =
    "{\"root_system\": {\"type\": \"A1\"},"
    " \"polytope\": {\"inequalities\": [{\"normal\": [1], \"offset\": 2},"
    "                                  {\"normal\": [-1], \"offset\": 2}]},"
    " \"functions\": {\"ray1\": {\"ray\": {\"weight\": 1, \"lambda\": 1}}}}";

static const char* kUnstable =
    "{\"root_system\": {\"type\": \"A1\"},"
    " \"polytope\": {\"vertices\": [[1], [-1]]}}";

static const char* kToric =
    "{\"root_system\": {\"central_dim\": 1},"
    " \"polytope\": {\"vertices\": [[-1], [3]]}}";

int main(void) {
  kestab_problem* p = NULL;
  kestab_verdict verdict;
  char* report = NULL;

  EXPECT(strcmp(kestab_version(), "1.0.0") == 0);

  EXPECT(kestab_problem_parse(kStable, &p) == KESTAB_OK);
  EXPECT(kestab_problem_set_quadrature(p, 0.01, 0, 0) == KESTAB_OK);
  EXPECT(kestab_check(p, &verdict, &report) == KESTAB_OK);
  EXPECT(verdict == KESTAB_EXISTS);
  EXPECT(report != NULL && strstr(report, "\"verdict\": \"Exists\"") != NULL);
  kestab_string_free(report);

  report = NULL;
  EXPECT(kestab_ding(p, "ray1", &report) == KESTAB_OK);
  EXPECT(report != NULL && strstr(report, "\"L\": \"-2+3/2*sqrt(2)\"") != NULL);
  kestab_string_free(report);

  report = NULL;
  EXPECT(kestab_ray_scan(p, 1, "8", 4, &report) == KESTAB_OK);
  EXPECT(report != NULL && strstr(report, "bounded_below_growing") != NULL);
  kestab_string_free(report);

  report = NULL;
  EXPECT(kestab_ray_scan(p, 1, "8", 1, &report) == KESTAB_ERR_INVALID_INPUT);
  EXPECT(report == NULL);
  EXPECT(strstr(kestab_last_error(), "degenerate") != NULL);

  EXPECT(kestab_distance(p, "zero", "ray1", &report) == KESTAB_OK);
  kestab_string_free(report);
  EXPECT(kestab_convexity(p, "zero", "ray1", 4, &report) == KESTAB_OK);
  EXPECT(strstr(report, "\"pass\": true") != NULL);
  kestab_string_free(report);
  EXPECT(kestab_probe(p, 1, "10", 5, &report) == KESTAB_OK);
  kestab_string_free(report);
  EXPECT(kestab_futaki(p, "[1]", &report) == KESTAB_ERR_INVALID_INPUT);
  EXPECT(kestab_ding(p, "{\"pieces\": [{\"gradient\": [1], \"offset\": 0}]}", &report) ==
         KESTAB_ERR_INVALID_INPUT);
  EXPECT(strstr(kestab_last_error(), "W-invariance") != NULL ||
         strstr(kestab_last_error(), "normalization") != NULL);
  EXPECT(kestab_problem_set_quadrature(p, -1, -1, -1) == KESTAB_OK);
  kestab_problem_free(p);

  p = NULL;
  EXPECT(kestab_problem_parse(kUnstable, &p) == KESTAB_OK);
  EXPECT(kestab_check(p, &verdict, NULL) == KESTAB_OK);
  EXPECT(verdict == KESTAB_UNSTABLE);
  EXPECT(kestab_ding(p, "zero", &report) == KESTAB_ERR_DIVERGENT);
  kestab_problem_free(p);

  p = NULL;
  EXPECT(kestab_problem_parse(kToric, &p) == KESTAB_OK);
  EXPECT(kestab_check(p, &verdict, NULL) == KESTAB_OK);
  EXPECT(verdict == KESTAB_FUTAKI_OBSTRUCTED);
  EXPECT(kestab_futaki(p, "[1]", &report) == KESTAB_OK);
  EXPECT(strstr(report, "\"futaki\": \"2\"") != NULL);
  kestab_string_free(report);
  kestab_problem_free(p);

  p = NULL;
  EXPECT(kestab_problem_parse("{not json", &p) == KESTAB_ERR_PARSE);
  EXPECT(p == NULL);
  EXPECT(kestab_problem_load("/nonexistent.json", &p) != KESTAB_OK);
  EXPECT(kestab_problem_parse("{\"root_system\": {\"type\": \"E8\"},"
                              " \"polytope\": {\"vertices\": [[1], [-1]]}}",
                              &p) == KESTAB_ERR_UNSUPPORTED);
  EXPECT(kestab_check(NULL, &verdict, NULL) == KESTAB_ERR_INVALID_INPUT);
  kestab_problem_free(NULL);

  if (failures == 0) printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
