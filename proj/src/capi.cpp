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

#include "socialnav.h"

#include <cmath>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include "socialnav/control.hpp"
#include "socialnav/experiment.hpp"
#include "socialnav/planner.hpp"
#include "socialnav/render.hpp"
#include "socialnav/scenario.hpp"
#include "socialnav/social.hpp"

// The handle types are thin wrappers so the C++ types never cross the ABI.
struct sn_scenario {
  socialnav::Scenario scenario;
};

struct sn_plan_result {
  socialnav::PlanResult result;
};

namespace {

thread_local std::string g_last_error;

sn_status set_error(sn_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

sn_status from_exception() {
  try {
    throw;
  } catch (const socialnav::ScenarioError& e) {
    return set_error(SN_ERR_SCENARIO, e.what());
  } catch (const std::exception& e) {
    return set_error(SN_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SN_ERR_INTERNAL, "unknown error");
  }
}

bool to_variant(sn_variant v, socialnav::Variant& out) {
  switch (v) {
    case SN_VARIANT_RRT_STAR:
      out = socialnav::Variant::kRrtStar;
      return true;
    case SN_VARIANT_SOCIAL:
      out = socialnav::Variant::kSocial;
      return true;
    case SN_VARIANT_SOCIAL_INFORMED:
      out = socialnav::Variant::kSocialInformed;
      return true;
    case SN_VARIANT_SOCIAL_BASE_ONLY:
      out = socialnav::Variant::kSocialBaseOnly;
      return true;
  }
  return false;
}

sn_status write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) return set_error(SN_ERR_IO, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out.good()) return set_error(SN_ERR_IO, "failed writing " + path);
  return SN_OK;
}

bool file_readable(const std::string& path) {
  return std::ifstream(path).good();
}

}  // namespace

extern "C" {

const char* sn_last_error(void) { return g_last_error.c_str(); }

const char* sn_status_name(sn_status status) {
  switch (status) {
    case SN_OK:
      return "SN_OK";
    case SN_ERR_INVALID_ARG:
      return "SN_ERR_INVALID_ARG";
    case SN_ERR_IO:
      return "SN_ERR_IO";
    case SN_ERR_SCENARIO:
      return "SN_ERR_SCENARIO";
    case SN_ERR_NO_SOLUTION:
      return "SN_ERR_NO_SOLUTION";
    case SN_ERR_SIM_TIMEOUT:
      return "SN_ERR_SIM_TIMEOUT";
    case SN_ERR_INTERNAL:
      return "SN_ERR_INTERNAL";
  }
  return "SN_STATUS_UNKNOWN";
}

sn_status sn_scenario_load(const char* path, sn_scenario** out) {
  if (!path || !out) return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  *out = nullptr;
  if (!file_readable(path)) {
    return set_error(SN_ERR_IO,
                     "cannot open " + std::string(path) + " for reading");
  }
  try {
    auto* handle = new sn_scenario{socialnav::load_scenario(path)};
    *out = handle;
    return SN_OK;
  } catch (...) {
    return from_exception();
  }
}

sn_status sn_scenario_parse(const char* json_text, sn_scenario** out) {
  if (!json_text || !out) {
    return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  }
  *out = nullptr;
  try {
    auto* handle = new sn_scenario{socialnav::parse_scenario(json_text)};
    *out = handle;
    return SN_OK;
  } catch (...) {
    return from_exception();
  }
}

void sn_scenario_free(sn_scenario* scenario) { delete scenario; }

sn_status sn_plan(const sn_scenario* scenario, const sn_plan_options* options,
                  sn_plan_result** out) {
  if (!scenario || !out) return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  *out = nullptr;

  socialnav::Variant variant = socialnav::Variant::kSocial;
  socialnav::PlannerParams params = scenario->scenario.planner;
  const char* trace_csv = nullptr;
  if (options) {
    if (!to_variant(options->variant, variant)) {
      return set_error(SN_ERR_INVALID_ARG, "unknown variant value");
    }
    if (options->has_seed) params.seed = options->seed;
    if (options->iterations > 0) params.iterations = options->iterations;
    trace_csv = options->trace_csv;
  }

  try {
    socialnav::Planner planner(scenario->scenario, params, variant);
    planner.set_trace_enabled(trace_csv != nullptr);
    planner.run();
    if (trace_csv) {
      std::ofstream trace_out(trace_csv);
      if (!trace_out) {
        return set_error(SN_ERR_IO, "cannot open " + std::string(trace_csv) +
                                        " for writing");
      }
      socialnav::write_trace_csv(planner.trace(), trace_out);
    }
    auto result = planner.result();
    if (!result) {
      return set_error(SN_ERR_NO_SOLUTION,
                       "no path reached the goal region within " +
                           std::to_string(params.iterations) + " iterations");
    }
    *out = new sn_plan_result{std::move(*result)};
    return SN_OK;
  } catch (...) {
    return from_exception();
  }
}

size_t sn_plan_result_waypoint_count(const sn_plan_result* result) {
  return result ? result->result.waypoints.size() : 0;
}

sn_status sn_plan_result_waypoint(const sn_plan_result* result, size_t index,
                                  double out_config[4]) {
  if (!result || !out_config) {
    return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  }
  if (index >= result->result.waypoints.size()) {
    return set_error(SN_ERR_INVALID_ARG, "waypoint index out of range");
  }
  const socialnav::Configuration& q = result->result.waypoints[index];
  out_config[0] = q.x;
  out_config[1] = q.y;
  out_config[2] = q.psi1;
  out_config[3] = q.psi2;
  return SN_OK;
}

double sn_plan_result_total_cost(const sn_plan_result* result) {
  return result ? result->result.total_cost : std::nan("");
}

double sn_plan_result_social_cost(const sn_plan_result* result) {
  if (!result) return std::nan("");
  double social = 0.0;
  for (const socialnav::EdgeRecord& e : result->result.per_edge) {
    social += e.social;
  }
  return social;
}

double sn_plan_result_length(const sn_plan_result* result) {
  if (!result) return std::nan("");
  double length = 0.0;
  for (const socialnav::EdgeRecord& e : result->result.per_edge) {
    length += e.length;
  }
  return length;
}

uint64_t sn_plan_result_seed(const sn_plan_result* result) {
  return result ? result->result.seed : 0;
}

sn_status sn_plan_result_save(const sn_plan_result* result,
                              const char* path) {
  if (!result || !path) return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  return write_text_file(path, socialnav::plan_result_to_json(result->result));
}

sn_status sn_plan_result_load(const char* path, sn_plan_result** out) {
  if (!path || !out) return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  *out = nullptr;
  if (!file_readable(path)) {
    return set_error(SN_ERR_IO,
                     "cannot open " + std::string(path) + " for reading");
  }
  try {
    auto* handle = new sn_plan_result{socialnav::load_plan_result(path)};
    *out = handle;
    return SN_OK;
  } catch (...) {
    return from_exception();
  }
}

void sn_plan_result_free(sn_plan_result* result) { delete result; }

sn_status sn_simulate(const sn_scenario* scenario,
                      const sn_plan_result* result,
                      const sn_sim_options* options, sn_sim_stats* out_stats) {
  if (!scenario || !result) {
    return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  }
  socialnav::ControlParams params = scenario->scenario.control;
  const char* log_csv = nullptr;
  if (options) {
    if (options->horizon > 0.0) params.horizon = options->horizon;
    log_csv = options->log_csv;
  }

  try {
    const socialnav::SimLog log = socialnav::follow_path(
        result->result, params, scenario->scenario.world,
        scenario->scenario.field, scenario->scenario.robot,
        scenario->scenario.object);
    if (out_stats) {
      out_stats->final_base_error = log.final_base_error;
      out_stats->final_joint_errors[0] = log.final_joint_errors[0];
      out_stats->final_joint_errors[1] = log.final_joint_errors[1];
      out_stats->steps = static_cast<long>(log.states.size()) - 1;
      out_stats->timed_out = log.timed_out ? 1 : 0;
      out_stats->invalid_states = log.invalid_states;
    }
    if (log_csv) {
      std::ofstream out(log_csv);
      if (!out) {
        return set_error(SN_ERR_IO, "cannot open " + std::string(log_csv) +
                                        " for writing");
      }
      socialnav::write_trajectory_csv(log, out);
    }
    if (log.timed_out) {
      return set_error(SN_ERR_SIM_TIMEOUT,
                       "simulation hit the time horizon before the final"
                       " waypoint");
    }
    return SN_OK;
  } catch (...) {
    return from_exception();
  }
}

sn_status sn_batch(const sn_scenario* scenario,
                   const sn_batch_options* options) {
  if (!scenario || !options || !options->out_dir) {
    return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  }
  if (options->runs < 1) {
    return set_error(SN_ERR_INVALID_ARG, "runs must be >= 1");
  }

  std::vector<socialnav::Variant> variants;
  if (!options->variants) {
    variants = {socialnav::Variant::kRrtStar, socialnav::Variant::kSocial,
                socialnav::Variant::kSocialInformed,
                socialnav::Variant::kSocialBaseOnly};
  } else {
    std::string list(options->variants);
    std::size_t begin = 0;
    while (begin <= list.size()) {
      std::size_t end = list.find(',', begin);
      if (end == std::string::npos) end = list.size();
      const std::string name = list.substr(begin, end - begin);
      const auto v = socialnav::parse_variant(name);
      if (!v) {
        return set_error(SN_ERR_INVALID_ARG,
                         "unknown variant \"" + name + "\"");
      }
      variants.push_back(*v);
      begin = end + 1;
    }
  }

  try {
    socialnav::Scenario run_scenario = scenario->scenario;
    if (options->iterations > 0) {
      run_scenario.planner.iterations = options->iterations;
    }
    const auto summaries =
        socialnav::run_batch(run_scenario, variants, options->base_seed,
                             options->runs, options->jobs);
    socialnav::emit_metrics(summaries, options->out_dir);
    return SN_OK;
  } catch (...) {
    return from_exception();
  }
}

sn_status sn_render_svg(const sn_scenario* scenario,
                        const sn_plan_result* result, const char* out_path) {
  if (!scenario || !out_path) {
    return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  }
  try {
    const std::string svg = socialnav::render_svg(
        scenario->scenario, result ? &result->result : nullptr);
    return write_text_file(out_path, svg);
  } catch (...) {
    return from_exception();
  }
}

sn_status sn_export_agf_csv(const sn_scenario* scenario, double cell_size,
                            const char* out_path) {
  if (!scenario || !out_path) {
    return set_error(SN_ERR_INVALID_ARG, "NULL argument");
  }
  if (!(cell_size > 0.0)) {
    return set_error(SN_ERR_INVALID_ARG, "cell_size must be positive");
  }
  try {
    std::ofstream out(out_path);
    if (!out) {
      return set_error(SN_ERR_IO, "cannot open " + std::string(out_path) +
                                      " for writing");
    }
    socialnav::write_agf_grid_csv(scenario->scenario.field,
                                  scenario->scenario.world.bounds, cell_size,
                                  out);
    if (!out.good()) {
      return set_error(SN_ERR_IO, "failed writing " + std::string(out_path));
    }
    return SN_OK;
  } catch (...) {
    return from_exception();
  }
}

}  // extern "C"
