/* Copyright 2026 The kestab Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to kestab. Every call returns a kestab_status; on failure
 * kestab_last_error() describes the problem (thread-local, valid until the
 * next call on the same thread). Reports are JSON strings owned by the caller
 * and released with kestab_string_free. */

#ifndef KESTAB_H
#define KESTAB_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(KESTAB_BUILDING_LIBRARY)
#define KESTAB_API __declspec(dllexport)
#else
#define KESTAB_API __declspec(dllimport)
#endif
#else
#define KESTAB_API __attribute__((visibility("default")))
#endif

typedef struct kestab_problem kestab_problem;

typedef enum kestab_status {
  KESTAB_OK = 0,
  KESTAB_ERR_INVALID_INPUT = 1,
  KESTAB_ERR_PARSE = 2,
  KESTAB_ERR_UNSUPPORTED = 3,
  KESTAB_ERR_DIVERGENT = 4,
  KESTAB_ERR_NUMERICAL = 5,
  KESTAB_ERR_INTERNAL = 6
} kestab_status;

typedef enum kestab_verdict {
  KESTAB_EXISTS = 0,
  KESTAB_SEMISTABLE_BOUNDARY = 1,
  KESTAB_UNSTABLE = 2,
  KESTAB_FUTAKI_OBSTRUCTED = 3
} kestab_verdict;

KESTAB_API const char* kestab_version(void);
KESTAB_API const char* kestab_last_error(void);
KESTAB_API void kestab_string_free(char* s);

KESTAB_API kestab_status kestab_problem_load(const char* path, kestab_problem** out);
KESTAB_API kestab_status kestab_problem_parse(const char* json_text, kestab_problem** out);
KESTAB_API void kestab_problem_free(kestab_problem* problem);

/* Nonpositive arguments keep the current value. */
KESTAB_API kestab_status kestab_problem_set_quadrature(kestab_problem* problem, double step,
                                                       double radius, double tail_tol);

/* Function references are names from the problem file, "zero", or inline
 * JSON {"pieces": [...]}. Exact values (lambda_max, xi) use the problem
 * file's number syntax. */
KESTAB_API kestab_status kestab_check(const kestab_problem* problem, kestab_verdict* verdict,
                                      char** report);
KESTAB_API kestab_status kestab_ding(const kestab_problem* problem, const char* function,
                                     char** report);
KESTAB_API kestab_status kestab_ray_scan(const kestab_problem* problem, int weight,
                                         const char* lambda_max, int steps, char** report);
KESTAB_API kestab_status kestab_distance(const kestab_problem* problem, const char* from,
                                         const char* to, char** report);
KESTAB_API kestab_status kestab_probe(const kestab_problem* problem, int weight,
                                      const char* lambda_max, int steps, char** report);
KESTAB_API kestab_status kestab_convexity(const kestab_problem* problem, const char* from,
                                          const char* to, int steps, char** report);
/* xi is a JSON array, e.g. "[1, \"1/2\"]". */
KESTAB_API kestab_status kestab_futaki(const kestab_problem* problem, const char* xi,
                                       char** report);

#ifdef __cplusplus
}
#endif

#endif /* KESTAB_H */
