/* Copyright 2026 The socialnav Authors
 *
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

/* C interface to the socialnav planning library.
 *
 * All functions return sn_status; SN_OK means success. On failure,
 * sn_last_error() returns a thread-local human-readable message describing
 * the most recent error on the calling thread. Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * *_free function. Passing NULL where an object is required yields
 * SN_ERR_INVALID_ARG, never a crash.
 */

#ifndef SOCIALNAV_H_
#define SOCIALNAV_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SN_API __declspec(dllexport)
#else
#define SN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sn_status {
  SN_OK = 0,
  SN_ERR_INVALID_ARG = 1, /* NULL handle, bad enum value, bad option */
  SN_ERR_IO = 2,          /* file could not be opened, read, or written */
  SN_ERR_SCENARIO = 3,    /* scenario or result JSON failed to parse or
                             violated a validation rule */
  SN_ERR_NO_SOLUTION = 4, /* the planner found no path to the goal */
  SN_ERR_SIM_TIMEOUT = 5, /* simulation hit the time horizon */
  SN_ERR_INTERNAL = 6     /* unexpected failure; see sn_last_error() */
} sn_status;

typedef enum sn_variant {
  SN_VARIANT_RRT_STAR = 0,        /* length-only objective */
  SN_VARIANT_SOCIAL = 1,          /* full multi-point social objective */
  SN_VARIANT_SOCIAL_INFORMED = 2, /* social + ellipse sampling after the
                                     first solution */
  SN_VARIANT_SOCIAL_BASE_ONLY = 3 /* social cost on the base point only */
} sn_variant;

typedef struct sn_scenario sn_scenario;
typedef struct sn_plan_result sn_plan_result;

/* Message for the most recent failure on this thread; empty string if none.
 * The pointer stays valid until the next failing call on the same thread. */
SN_API const char* sn_last_error(void);

/* Stable identifier for a status code, e.g. "SN_ERR_IO". */
SN_API const char* sn_status_name(sn_status status);

SN_API sn_status sn_scenario_load(const char* path, sn_scenario** out);
SN_API sn_status sn_scenario_parse(const char* json_text, sn_scenario** out);
SN_API void sn_scenario_free(sn_scenario* scenario);

typedef struct sn_plan_options {
  sn_variant variant;
  int has_seed;          /* 0: use the scenario's seed */
  uint64_t seed;
  int iterations;        /* <= 0: use the scenario's iteration count */
  const char* trace_csv; /* optional path for a per-iteration trace CSV */
} sn_plan_options;

/* Runs the planner. options may be NULL for scenario defaults with the
 * social variant. Returns SN_ERR_NO_SOLUTION when no waypoint sequence
 * reaches the goal region within the iteration budget. */
SN_API sn_status sn_plan(const sn_scenario* scenario,
                         const sn_plan_options* options,
                         sn_plan_result** out);

SN_API size_t sn_plan_result_waypoint_count(const sn_plan_result* result);

/* Copies waypoint `index` as (x, y, psi1, psi2) into out_config. */
SN_API sn_status sn_plan_result_waypoint(const sn_plan_result* result,
                                         size_t index, double out_config[4]);

SN_API double sn_plan_result_total_cost(const sn_plan_result* result);
SN_API double sn_plan_result_social_cost(const sn_plan_result* result);
SN_API double sn_plan_result_length(const sn_plan_result* result);
SN_API uint64_t sn_plan_result_seed(const sn_plan_result* result);

SN_API sn_status sn_plan_result_save(const sn_plan_result* result,
                                     const char* path);
SN_API sn_status sn_plan_result_load(const char* path, sn_plan_result** out);
SN_API void sn_plan_result_free(sn_plan_result* result);

typedef struct sn_sim_options {
  const char* log_csv; /* optional path for the trajectory CSV */
  double horizon;      /* <= 0: use the scenario's horizon, seconds */
} sn_sim_options;

typedef struct sn_sim_stats {
  double final_base_error;      /* meters to the last waypoint */
  double final_joint_errors[2]; /* radians to the last waypoint */
  long steps;                   /* integration steps taken */
  int timed_out;
  int invalid_states;           /* simulated states failing validity */
} sn_sim_stats;

/* Follows the planned path with the closed-loop controller. Fills stats
 * (and writes the log) even when the run times out, in which case the
 * return value is SN_ERR_SIM_TIMEOUT. */
SN_API sn_status sn_simulate(const sn_scenario* scenario,
                             const sn_plan_result* result,
                             const sn_sim_options* options,
                             sn_sim_stats* out_stats);

typedef struct sn_batch_options {
  const char* variants; /* comma-separated variant names; NULL: all four */
  int runs;             /* runs per variant, >= 1 */
  uint64_t base_seed;   /* run i uses base_seed + i for every variant */
  int iterations;       /* <= 0: use the scenario's iteration count */
  const char* out_dir;  /* metrics directory, created if needed */
  int jobs;             /* worker threads; <= 0: hardware concurrency */
} sn_batch_options;

/* Runs the batch experiment and writes run_index.csv, boxplot_summary.csv,
 * and per-run curve CSVs under out_dir. Individual failed runs are recorded
 * in the metrics and do not abort the batch. */
SN_API sn_status sn_batch(const sn_scenario* scenario,
                          const sn_batch_options* options);

/* Renders the scenario, and the path when result is non-NULL, to an SVG
 * file. */
SN_API sn_status sn_render_svg(const sn_scenario* scenario,
                               const sn_plan_result* result,
                               const char* out_path);

/* Samples the combined person comfort field on a grid of the given cell
 * size over the world bounds and writes a row-major CSV heatmap. */
SN_API sn_status sn_export_agf_csv(const sn_scenario* scenario,
                                   double cell_size, const char* out_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SOCIALNAV_H_ */
