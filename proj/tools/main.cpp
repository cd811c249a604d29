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

// Command line front end. Talks to the library exclusively through the
// C interface in socialnav.h.
//
// Exit codes: 0 success, 1 usage error, 2 scenario parse/validation error,
// 3 no path found, 4 I/O error, 5 simulation timeout, 6 internal error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "socialnav.h"

namespace {

int exit_code(sn_status status) {
  switch (status) {
    case SN_OK:
      return 0;
    case SN_ERR_INVALID_ARG:
      return 1;
    case SN_ERR_SCENARIO:
      return 2;
    case SN_ERR_NO_SOLUTION:
      return 3;
    case SN_ERR_IO:
      return 4;
    case SN_ERR_SIM_TIMEOUT:
      return 5;
    case SN_ERR_INTERNAL:
      return 6;
  }
  return 6;
}

int fail(sn_status status) {
  std::fprintf(stderr, "error: %s (%s)\n", sn_last_error(),
               sn_status_name(status));
  return exit_code(status);
}

sn_variant variant_from_name(const std::string& name) {
  if (name == "rrt-star") return SN_VARIANT_RRT_STAR;
  if (name == "social-informed") return SN_VARIANT_SOCIAL_INFORMED;
  if (name == "social-base-only") return SN_VARIANT_SOCIAL_BASE_ONLY;
  return SN_VARIANT_SOCIAL;
}

struct ScenarioHandle {
  sn_scenario* ptr = nullptr;
  ~ScenarioHandle() { sn_scenario_free(ptr); }
};

struct ResultHandle {
  sn_plan_result* ptr = nullptr;
  ~ResultHandle() { sn_plan_result_free(ptr); }
};

bool ensure_out_dir(const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "error: cannot create %s: %s\n", out_dir.c_str(),
                 ec.message().c_str());
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "socialnav: socially aware whole-body planning for a mobile"
      " manipulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string variant = "social";
  std::uint64_t seed = 0;
  int iterations = 0;
  int runs = 10;
  int jobs = 0;
  std::string out_dir = "out";
  std::string plan_path;
  double agf_cell = 0.0;
  bool trace = false;
  std::vector<std::string> batch_variants;

  const std::vector<std::string> variant_names{
      "rrt-star", "social", "social-informed", "social-base-only"};

  auto add_common = [&](CLI::App* cmd, bool with_variant) {
    cmd->add_option("--scenario", scenario_path, "Scenario JSON file")
        ->required();
    cmd->add_option("--out", out_dir, "Output directory (created if needed)")
        ->capture_default_str();
    if (with_variant) {
      cmd->add_option("--variant", variant, "Planner variant")
          ->check(CLI::IsMember(variant_names))
          ->capture_default_str();
      cmd->add_option("--seed", seed, "RNG seed (default: scenario seed)");
      cmd->add_option("--iterations", iterations,
                      "Planner iterations (default: scenario value)");
      cmd->add_flag("--trace", trace,
                    "Write a per-iteration trace CSV next to the result");
    }
  };

  CLI::App* plan_cmd =
      app.add_subcommand("plan", "Plan a path and store it as JSON");
  add_common(plan_cmd, true);

  CLI::App* sim_cmd = app.add_subcommand(
      "simulate", "Plan a path, then follow it with the controller");
  add_common(sim_cmd, true);

  CLI::App* batch_cmd = app.add_subcommand(
      "batch", "Run seeded experiments across variants and emit metrics");
  batch_cmd->add_option("--scenario", scenario_path, "Scenario JSON file")
      ->required();
  batch_cmd->add_option("--out", out_dir, "Metrics directory")
      ->capture_default_str();
  batch_cmd
      ->add_option("--variant", batch_variants,
                   "Variant to include (repeatable; default: all four)")
      ->check(CLI::IsMember(variant_names));
  batch_cmd->add_option("--runs", runs, "Runs per variant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  batch_cmd->add_option("--seed", seed, "Base seed; run i uses seed + i");
  batch_cmd->add_option("--iterations", iterations,
                        "Planner iterations (default: scenario value)");
  batch_cmd->add_option("--jobs", jobs,
                        "Worker threads (default: hardware concurrency)");

  CLI::App* render_cmd = app.add_subcommand(
      "render", "Render the scenario (and optionally a stored plan) to SVG");
  render_cmd->add_option("--scenario", scenario_path, "Scenario JSON file")
      ->required();
  render_cmd->add_option("--out", out_dir, "Output directory")
      ->capture_default_str();
  render_cmd->add_option("--plan", plan_path,
                         "Stored plan JSON to draw on top of the scenario");
  render_cmd->add_option(
      "--agf-cell", agf_cell,
      "Also export the comfort-field heatmap CSV at this cell size, meters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Collapse CLI11's parse-error codes onto one usage exit code; --help
    // still exits 0.
    return app.exit(e) == 0 ? 0 : 1;
  }

  ScenarioHandle scenario;
  if (sn_status s = sn_scenario_load(scenario_path.c_str(), &scenario.ptr);
      s != SN_OK) {
    return fail(s);
  }
  if (!ensure_out_dir(out_dir)) return exit_code(SN_ERR_IO);

  if (app.got_subcommand(plan_cmd) || app.got_subcommand(sim_cmd)) {
    sn_plan_options options{};
    options.variant = variant_from_name(variant);
    options.has_seed = plan_cmd->count("--seed") + sim_cmd->count("--seed") > 0
                           ? 1
                           : 0;
    options.seed = seed;
    options.iterations = iterations;
    const std::string trace_path = out_dir + "/trace.csv";
    options.trace_csv = trace ? trace_path.c_str() : nullptr;

    ResultHandle result;
    if (sn_status s = sn_plan(scenario.ptr, &options, &result.ptr);
        s != SN_OK) {
      return fail(s);
    }
    const std::string result_path = out_dir + "/plan.json";
    if (sn_status s = sn_plan_result_save(result.ptr, result_path.c_str());
        s != SN_OK) {
      return fail(s);
    }
    std::printf("plan: variant=%s seed=%llu waypoints=%zu total_cost=%.6f\n",
                variant.c_str(),
                static_cast<unsigned long long>(
                    sn_plan_result_seed(result.ptr)),
                sn_plan_result_waypoint_count(result.ptr),
                sn_plan_result_total_cost(result.ptr));
    std::printf("plan: wrote %s\n", result_path.c_str());

    if (app.got_subcommand(sim_cmd)) {
      const std::string log_path = out_dir + "/trajectory.csv";
      sn_sim_options sim_options{};
      sim_options.log_csv = log_path.c_str();
      sn_sim_stats stats{};
      const sn_status s =
          sn_simulate(scenario.ptr, result.ptr, &sim_options, &stats);
      if (s != SN_OK && s != SN_ERR_SIM_TIMEOUT) return fail(s);
      std::printf(
          "simulate: steps=%ld timed_out=%d base_error=%.4f"
          " joint_errors=%.4f,%.4f invalid_states=%d\n",
          stats.steps, stats.timed_out, stats.final_base_error,
          stats.final_joint_errors[0], stats.final_joint_errors[1],
          stats.invalid_states);
      std::printf("simulate: wrote %s\n", log_path.c_str());
      if (s != SN_OK) return fail(s);
    }
    return 0;
  }

  if (app.got_subcommand(batch_cmd)) {
    std::string joined;
    for (const std::string& v : batch_variants) {
      if (!joined.empty()) joined += ',';
      joined += v;
    }
    sn_batch_options options{};
    options.variants = batch_variants.empty() ? nullptr : joined.c_str();
    options.runs = runs;
    options.base_seed = seed;
    options.iterations = iterations;
    options.out_dir = out_dir.c_str();
    options.jobs = jobs;
    if (sn_status s = sn_batch(scenario.ptr, &options); s != SN_OK) {
      return fail(s);
    }
    std::printf("batch: wrote metrics to %s\n", out_dir.c_str());
    return 0;
  }

  // render
  ResultHandle stored;
  if (!plan_path.empty()) {
    if (sn_status s = sn_plan_result_load(plan_path.c_str(), &stored.ptr);
        s != SN_OK) {
      return fail(s);
    }
  }
  const std::string svg_path = out_dir + "/scene.svg";
  if (sn_status s = sn_render_svg(scenario.ptr, stored.ptr, svg_path.c_str());
      s != SN_OK) {
    return fail(s);
  }
  std::printf("render: wrote %s\n", svg_path.c_str());
  if (agf_cell > 0.0) {
    const std::string grid_path = out_dir + "/agf_grid.csv";
    if (sn_status s =
            sn_export_agf_csv(scenario.ptr, agf_cell, grid_path.c_str());
        s != SN_OK) {
      return fail(s);
    }
    std::printf("render: wrote %s\n", grid_path.c_str());
  }
  return 0;
}
