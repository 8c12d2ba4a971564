// Copyright 2026 The CCS Duet Authors
//
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

/* C interface to the planner. Handles are opaque; every call that can fail
 * returns a status and leaves a message for ccsduet_last_error(). Strings
 * returned through out-parameters are released with ccsduet_string_free(). */

#ifndef CCSDUET_CCSDUET_H_
#define CCSDUET_CCSDUET_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CCSDUET_API __declspec(dllexport)
#else
#define CCSDUET_API __attribute__((visibility("default")))
#endif

typedef enum {
  CCSDUET_OK = 0,
  CCSDUET_MALFORMED = 1,
  CCSDUET_NONVIABLE = 2,
  CCSDUET_INVARIANT = 3,
  CCSDUET_IO = 4,
  CCSDUET_ARGUMENT = 5
} ccsduet_status;

typedef struct ccsduet_scene ccsduet_scene;
typedef struct ccsduet_plan ccsduet_plan;

typedef struct {
  double lower_bound_gap;
  double hull_identity_residual;
  double hull_alt_residual;
  double trace_hull_residual;
  /* NaN when no oracle was run. */
  double oracle_gap;
  double oracle_step;
  double min_separation;
  /* Validation only; zero otherwise. */
  double length_residual;
  double continuity_error;
  double schedule_error;
  int piece_count_a;
  int piece_count_b;
  int pass;
  /* "chords", "distances", "both" or "neither". */
  char hull_identity_match[16];
  /* Failed validation checks, comma separated. */
  char failures[128];
} ccsduet_report;

CCSDUET_API ccsduet_status ccsduet_scene_from_json(const char* text,
                                                   ccsduet_scene** out);
CCSDUET_API ccsduet_status ccsduet_scene_load(const char* path,
                                              ccsduet_scene** out);
CCSDUET_API void ccsduet_scene_free(ccsduet_scene* scene);
/* Diagonal of the endpoint box inflated by the sum circumradius. */
CCSDUET_API double ccsduet_scene_diameter(const ccsduet_scene* scene);

/* Plans the scene. CCSDUET_NONVIABLE when an endpoint configuration
 * overlaps. */
CCSDUET_API ccsduet_status ccsduet_plan_scene(const ccsduet_scene* scene,
                                              ccsduet_plan** out);
CCSDUET_API void ccsduet_plan_free(ccsduet_plan* plan);
CCSDUET_API double ccsduet_plan_length(const ccsduet_plan* plan);
/* Static strings. */
CCSDUET_API const char* ccsduet_plan_case(const ccsduet_plan* plan);
CCSDUET_API const char* ccsduet_plan_direction(const ccsduet_plan* plan);

/* Certificate of the plan; oracle_step <= 0 skips the grid oracle. */
CCSDUET_API ccsduet_status ccsduet_plan_certify(const ccsduet_plan* plan,
                                                int samples, double oracle_step,
                                                ccsduet_report* out);
/* Result document with a certificate at 10^4 samples. */
CCSDUET_API ccsduet_status ccsduet_plan_to_json(const ccsduet_plan* plan,
                                                char** out);
CCSDUET_API ccsduet_status ccsduet_plan_write_svg(const ccsduet_plan* plan,
                                                  const char* path);

/* Rebuilds a result document against the scene and certifies it. Returns
 * CCSDUET_INVARIANT with the report filled in when a check fails. */
CCSDUET_API ccsduet_status ccsduet_validate_json(const char* result_text,
                                                 const ccsduet_scene* scene,
                                                 int samples,
                                                 ccsduet_report* out);

/* Grid oracle length. step <= 0 selects 1% of the scene diameter; margin < 0
 * selects twice the sum circumradius. */
CCSDUET_API ccsduet_status ccsduet_oracle(const ccsduet_scene* scene,
                                          double step, double margin,
                                          double* out);

CCSDUET_API void ccsduet_string_free(char* s);
/* Message of the last failed call on this thread; never NULL. */
CCSDUET_API const char* ccsduet_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* CCSDUET_CCSDUET_H_ */
