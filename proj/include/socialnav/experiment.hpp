// Copyright 2026 The socialnav Authors
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

#ifndef SOCIALNAV_EXPERIMENT_HPP_
#define SOCIALNAV_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "socialnav/planner.hpp"
#include "socialnav/scenario.hpp"

namespace socialnav {

/// Minimum distance (meters) from selected body points to any person center
/// over a densely interpolated path. Infinite when there are no persons.
struct Clearances {
  double base = 0.0;
  double link1_tip = 0.0;
  double link2_tip = 0.0;
  double object = 0.0;  // min over object polyline vertices
};

/// One point of a cost-vs-distance curve; row i accumulates the first i
/// edges of the path, so row 0 is all zeros.
struct CurvePoint {
  double cumulative_norm = 0.0;         // config-space length so far
  double cumulative_social = 0.0;       // planner's social metric so far
  double cumulative_social_full = 0.0;  // full multi-point metric so far
};

/// Outcome of one planner run inside a batch. Cost fields are NaN when the
/// run found no path.
struct RunSummary {
  Variant variant = Variant::kSocial;
  int run_index = 0;
  std::uint64_t seed = 0;
  bool success = false;
  int waypoints = 0;
  double total_cost = 0.0;        // the variant's own objective
  double social_cost = 0.0;       // social part under the variant's weights
  double social_cost_full = 0.0;  // re-scored under the scenario's weights
  double path_length_base = 0.0;  // base XY polyline length, meters
  Clearances clearances;
  std::vector<CurvePoint> curve;  // one row per waypoint
};

/// Social cost of a finished path under the scenario's full interest-point
/// weights, summed edge-wise at the planner resolution. This puts paths from
/// different variants on one comparable scale.
double rescore_social(const Scenario& scenario, const PlanResult& result);

/// Clearance profile of a path, sampled at the planner resolution.
Clearances path_clearances(const Scenario& scenario, const PlanResult& result);

/// Full summary (costs, curve, clearances) for one run's outcome.
RunSummary summarize_run(const Scenario& scenario, Variant variant,
                         int run_index, std::uint64_t seed,
                         const PlanResult* result);

/// Runs `runs` planner executions per variant. Run i uses seed
/// base_seed + i for every variant, pairing runs across variants. A run that
/// finds no path yields a failed summary; the batch always completes.
/// jobs > 1 fans runs out over that many threads; jobs <= 0 picks the
/// hardware concurrency. Summaries are ordered (variant, run) regardless.
std::vector<RunSummary> run_batch(const Scenario& scenario,
                                  const std::vector<Variant>& variants,
                                  std::uint64_t base_seed, int runs,
                                  int jobs = 1);

/// Quantile by linear interpolation between order statistics: the value at
/// rank p * (n - 1) in the sorted sample. `sorted` must be ascending and
/// non-empty, 0 <= p <= 1.
double quantile_sorted(const std::vector<double>& sorted, double p);

/// Writes run_index.csv, boxplot_summary.csv, and curves/curve_*.csv under
/// out_dir (created if needed). Output depends only on the summaries, so
/// identical batches produce byte-identical trees.
void emit_metrics(const std::vector<RunSummary>& summaries,
                  const std::string& out_dir);

}  // namespace socialnav

#endif  // SOCIALNAV_EXPERIMENT_HPP_
