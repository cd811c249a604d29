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

// Exercises the shared library through the C header alone; no C++ symbols
// from the core are referenced so this binary sees exactly what an external
// client sees.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <socialnav.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

// 12x12 world with one bystander off the direct route. Small enough that a
// modest iteration budget finds the goal on every seed used below.
const char* kScenarioJson = R"json({
  "world": {"bounds": {"min": [0, 0], "max": [12, 12]}},
  "persons": [{"position": [5.5, 5.5], "orientation": 2.356194490192345}],
  "object": {"polyline": [[-0.4, 0], [0.4, 0]]},
  "start": [2, 2, 0, 3.14159265358979],
  "goal_base": [9, 9],
  "planner": {"iterations": 1200, "seed": 5}
})json";

// Goal sealed inside a walled cavity; no path exists at any budget.
const char* kBoxedJson = R"json({
  "world": {
    "bounds": {"min": [0, 0], "max": [12, 12]},
    "obstacles": [
      {"type": "rect", "min": [6.5, 6.5], "max": [9.0, 6.8]},
      {"type": "rect", "min": [6.5, 8.7], "max": [9.0, 9.0]},
      {"type": "rect", "min": [6.5, 6.8], "max": [6.8, 8.7]},
      {"type": "rect", "min": [8.7, 6.8], "max": [9.0, 8.7]}
    ]
  },
  "object": {"polyline": [[-0.4, 0], [0.4, 0]]},
  "start": [2, 2, 0, 3.14159265358979],
  "goal_base": [7.75, 7.75],
  "planner": {"iterations": 150, "seed": 3, "goal_radius": 0.5}
})json";

fs::path make_temp_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch();
  const auto dir =
      fs::temp_directory_path() /
      ("socialnav_capi_" + tag + "_" +
       std::to_string(counter.fetch_add(1)) + "_" +
       std::to_string(
           std::chrono::duration_cast<std::chrono::nanoseconds>(stamp)
               .count()));
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (const char c : text) {
    if (c == '\n') ++n;
  }
  return n;
}

// One scenario handle and one planned result shared by the read-only cases.
struct SharedPlan {
  sn_scenario* scenario = nullptr;
  sn_plan_result* result = nullptr;

  SharedPlan() {
    REQUIRE(sn_scenario_parse(kScenarioJson, &scenario) == SN_OK);
    sn_plan_options options{};
    options.variant = SN_VARIANT_SOCIAL;
    options.has_seed = 1;
    options.seed = 5;
    options.iterations = 1200;
    options.trace_csv = nullptr;
    REQUIRE(sn_plan(scenario, &options, &result) == SN_OK);
  }
  ~SharedPlan() {
    sn_plan_result_free(result);
    sn_scenario_free(scenario);
  }
};

const SharedPlan& shared_plan() {
  static SharedPlan plan;
  return plan;
}

}  // namespace

TEST_CASE("status names are stable identifiers") {
  CHECK(std::string(sn_status_name(SN_OK)) == "SN_OK");
  CHECK(std::string(sn_status_name(SN_ERR_INVALID_ARG)) ==
        "SN_ERR_INVALID_ARG");
  CHECK(std::string(sn_status_name(SN_ERR_IO)) == "SN_ERR_IO");
  CHECK(std::string(sn_status_name(SN_ERR_SCENARIO)) == "SN_ERR_SCENARIO");
  CHECK(std::string(sn_status_name(SN_ERR_NO_SOLUTION)) ==
        "SN_ERR_NO_SOLUTION");
  CHECK(std::string(sn_status_name(SN_ERR_SIM_TIMEOUT)) ==
        "SN_ERR_SIM_TIMEOUT");
  CHECK(std::string(sn_status_name(SN_ERR_INTERNAL)) == "SN_ERR_INTERNAL");
  CHECK(std::string(sn_status_name(static_cast<sn_status>(42))) ==
        "SN_STATUS_UNKNOWN");
}

TEST_CASE("NULL arguments are rejected, not dereferenced") {
  sn_scenario* scenario = nullptr;
  sn_plan_result* result = nullptr;

  CHECK(sn_scenario_parse(nullptr, &scenario) == SN_ERR_INVALID_ARG);
  CHECK(std::string(sn_last_error()) == "NULL argument");
  CHECK(sn_scenario_load(nullptr, &scenario) == SN_ERR_INVALID_ARG);
  CHECK(sn_scenario_parse(kScenarioJson, nullptr) == SN_ERR_INVALID_ARG);
  CHECK(sn_plan(nullptr, nullptr, &result) == SN_ERR_INVALID_ARG);
  CHECK(sn_plan_result_waypoint_count(nullptr) == 0);
  CHECK(std::isnan(sn_plan_result_total_cost(nullptr)));
  CHECK(std::isnan(sn_plan_result_social_cost(nullptr)));
  CHECK(std::isnan(sn_plan_result_length(nullptr)));
  CHECK(sn_plan_result_seed(nullptr) == 0);
  CHECK(sn_plan_result_save(nullptr, "/tmp/x.json") == SN_ERR_INVALID_ARG);
  CHECK(sn_plan_result_load(nullptr, &result) == SN_ERR_INVALID_ARG);
  CHECK(sn_simulate(nullptr, nullptr, nullptr, nullptr) ==
        SN_ERR_INVALID_ARG);
  CHECK(sn_batch(nullptr, nullptr) == SN_ERR_INVALID_ARG);
  CHECK(sn_render_svg(nullptr, nullptr, "/tmp/x.svg") == SN_ERR_INVALID_ARG);
  CHECK(sn_export_agf_csv(nullptr, 0.5, "/tmp/x.csv") ==
        SN_ERR_INVALID_ARG);

  // Freeing NULL is a no-op.
  sn_scenario_free(nullptr);
  sn_plan_result_free(nullptr);
}

TEST_CASE("scenario parse and load failures map to distinct statuses") {
  sn_scenario* scenario = nullptr;

  SUBCASE("malformed JSON") {
    CHECK(sn_scenario_parse("{not json", &scenario) == SN_ERR_SCENARIO);
    CHECK(scenario == nullptr);
    CHECK(std::string(sn_last_error()).size() > 0);
  }
  SUBCASE("valid JSON violating a validation rule") {
    CHECK(sn_scenario_parse(R"({
      "world": {"bounds": {"min": [0, 0], "max": [12, 12]}},
      "start": [2, 2, 0, 3.14159265358979],
      "goal_base": [40, 40]
    })", &scenario) == SN_ERR_SCENARIO);
    CHECK(scenario == nullptr);
  }
  SUBCASE("missing file") {
    CHECK(sn_scenario_load("/nonexistent/socialnav_scenario.json",
                           &scenario) == SN_ERR_IO);
    CHECK(scenario == nullptr);
  }
  SUBCASE("load succeeds from a real file") {
    const fs::path dir = make_temp_dir("load");
    const fs::path file = dir / "scene.json";
    std::ofstream(file) << kScenarioJson;
    REQUIRE(sn_scenario_load(file.string().c_str(), &scenario) == SN_OK);
    REQUIRE(scenario != nullptr);
    sn_scenario_free(scenario);
    fs::remove_all(dir);
  }
}

TEST_CASE("planning produces an inspectable result") {
  const SharedPlan& plan = shared_plan();

  const size_t count = sn_plan_result_waypoint_count(plan.result);
  REQUIRE(count >= 2);

  double q[4] = {0, 0, 0, 0};
  REQUIRE(sn_plan_result_waypoint(plan.result, 0, q) == SN_OK);
  CHECK(q[0] == 2.0);
  CHECK(q[1] == 2.0);
  CHECK(q[2] == 0.0);
  CHECK(q[3] == doctest::Approx(3.14159265358979).epsilon(1e-15));

  REQUIRE(sn_plan_result_waypoint(plan.result, count - 1, q) == SN_OK);
  const double dx = q[0] - 9.0;
  const double dy = q[1] - 9.0;
  CHECK(std::sqrt(dx * dx + dy * dy) <= 1.5);

  CHECK(sn_plan_result_waypoint(plan.result, count, q) ==
        SN_ERR_INVALID_ARG);
  CHECK(std::string(sn_last_error()) == "waypoint index out of range");

  CHECK(sn_plan_result_total_cost(plan.result) > 0.0);
  CHECK(sn_plan_result_length(plan.result) > 0.0);
  CHECK(sn_plan_result_social_cost(plan.result) >= 0.0);
  CHECK(sn_plan_result_seed(plan.result) == 5);
}

TEST_CASE("planning twice with one seed gives bitwise equal costs") {
  const SharedPlan& plan = shared_plan();

  sn_plan_options options{};
  options.variant = SN_VARIANT_SOCIAL;
  options.has_seed = 1;
  options.seed = 5;
  options.iterations = 1200;
  sn_plan_result* again = nullptr;
  REQUIRE(sn_plan(plan.scenario, &options, &again) == SN_OK);

  CHECK(sn_plan_result_total_cost(again) ==
        sn_plan_result_total_cost(plan.result));
  CHECK(sn_plan_result_length(again) == sn_plan_result_length(plan.result));
  CHECK(sn_plan_result_waypoint_count(again) ==
        sn_plan_result_waypoint_count(plan.result));
  sn_plan_result_free(again);
}

TEST_CASE("unknown variant values are rejected") {
  const SharedPlan& plan = shared_plan();
  sn_plan_options options{};
  options.variant = static_cast<sn_variant>(99);
  sn_plan_result* result = nullptr;
  CHECK(sn_plan(plan.scenario, &options, &result) == SN_ERR_INVALID_ARG);
  CHECK(result == nullptr);
  CHECK(std::string(sn_last_error()) == "unknown variant value");
}

TEST_CASE("an unreachable goal reports no solution") {
  sn_scenario* scenario = nullptr;
  REQUIRE(sn_scenario_parse(kBoxedJson, &scenario) == SN_OK);
  sn_plan_result* result = nullptr;
  CHECK(sn_plan(scenario, nullptr, &result) == SN_ERR_NO_SOLUTION);
  CHECK(result == nullptr);
  CHECK(std::string(sn_last_error()).size() > 0);
  sn_scenario_free(scenario);
}

TEST_CASE("plan results round-trip through save and load") {
  const SharedPlan& plan = shared_plan();
  const fs::path dir = make_temp_dir("roundtrip");
  const fs::path file = dir / "plan.json";

  REQUIRE(sn_plan_result_save(plan.result, file.string().c_str()) == SN_OK);

  sn_plan_result* loaded = nullptr;
  REQUIRE(sn_plan_result_load(file.string().c_str(), &loaded) == SN_OK);
  REQUIRE(loaded != nullptr);

  const size_t count = sn_plan_result_waypoint_count(plan.result);
  REQUIRE(sn_plan_result_waypoint_count(loaded) == count);
  CHECK(sn_plan_result_total_cost(loaded) ==
        sn_plan_result_total_cost(plan.result));
  CHECK(sn_plan_result_social_cost(loaded) ==
        sn_plan_result_social_cost(plan.result));
  CHECK(sn_plan_result_length(loaded) == sn_plan_result_length(plan.result));
  CHECK(sn_plan_result_seed(loaded) == sn_plan_result_seed(plan.result));
  for (size_t i = 0; i < count; ++i) {
    double a[4];
    double b[4];
    REQUIRE(sn_plan_result_waypoint(plan.result, i, a) == SN_OK);
    REQUIRE(sn_plan_result_waypoint(loaded, i, b) == SN_OK);
    for (int k = 0; k < 4; ++k) CHECK(a[k] == b[k]);
  }
  sn_plan_result_free(loaded);

  SUBCASE("loading a missing file is an I/O error") {
    sn_plan_result* missing = nullptr;
    CHECK(sn_plan_result_load((dir / "absent.json").string().c_str(),
                              &missing) == SN_ERR_IO);
    CHECK(missing == nullptr);
  }
  SUBCASE("loading a non-result file is a scenario error") {
    const fs::path junk = dir / "junk.json";
    std::ofstream(junk) << "[1, 2, 3]";
    sn_plan_result* bad = nullptr;
    CHECK(sn_plan_result_load(junk.string().c_str(), &bad) ==
          SN_ERR_SCENARIO);
    CHECK(bad == nullptr);
  }
  fs::remove_all(dir);
}

TEST_CASE("simulation succeeds and reports stats") {
  const SharedPlan& plan = shared_plan();
  const fs::path dir = make_temp_dir("sim");
  const fs::path log = dir / "trajectory.csv";

  const std::string log_path = log.string();
  sn_sim_options options{};
  options.log_csv = log_path.c_str();
  options.horizon = 0.0;
  sn_sim_stats stats{};
  REQUIRE(sn_simulate(plan.scenario, plan.result, &options, &stats) ==
          SN_OK);

  CHECK(stats.timed_out == 0);
  CHECK(stats.steps >= 1);
  CHECK(stats.final_base_error < 0.05);
  CHECK(std::abs(stats.final_joint_errors[0]) < 0.02);
  CHECK(std::abs(stats.final_joint_errors[1]) < 0.02);

  const std::string text = read_file(log);
  REQUIRE(text.size() > 0);
  CHECK(text.rfind("time", 0) == 0);
  CHECK(count_lines(text) ==
        static_cast<std::size_t>(stats.steps) + 2);  // header + states
  fs::remove_all(dir);
}

TEST_CASE("a tight horizon yields a timeout with stats still filled") {
  const SharedPlan& plan = shared_plan();
  const fs::path dir = make_temp_dir("simto");
  const fs::path log = dir / "trajectory.csv";

  const std::string log_path = log.string();
  sn_sim_options options{};
  options.log_csv = log_path.c_str();
  options.horizon = 0.3;
  sn_sim_stats stats{};
  CHECK(sn_simulate(plan.scenario, plan.result, &options, &stats) ==
        SN_ERR_SIM_TIMEOUT);
  CHECK(stats.timed_out == 1);
  CHECK(stats.final_base_error > 1.0);
  CHECK(read_file(log).size() > 0);
  fs::remove_all(dir);
}

TEST_CASE("batch writes the metrics tree") {
  const SharedPlan& plan = shared_plan();
  const fs::path dir = make_temp_dir("batch");

  const std::string dir_path = dir.string();
  sn_batch_options options{};
  options.variants = "rrt-star,social";
  options.runs = 2;
  options.base_seed = 77;
  options.iterations = 400;
  options.out_dir = dir_path.c_str();
  options.jobs = 2;
  REQUIRE(sn_batch(plan.scenario, &options) == SN_OK);

  const std::string index = read_file(dir / "run_index.csv");
  REQUIRE(index.size() > 0);
  CHECK(index.rfind("variant,run_index,seed,success", 0) == 0);
  CHECK(count_lines(index) == 1 + 2 * 2);
  CHECK(read_file(dir / "boxplot_summary.csv").size() > 0);
  CHECK(fs::is_directory(dir / "curves"));

  SUBCASE("NULL variant list runs all four variants") {
    const fs::path all_dir = make_temp_dir("batch_all");
    const std::string all_path = all_dir.string();
    sn_batch_options all{};
    all.variants = nullptr;
    all.runs = 1;
    all.base_seed = 9;
    all.iterations = 300;
    all.out_dir = all_path.c_str();
    all.jobs = 0;
    REQUIRE(sn_batch(plan.scenario, &all) == SN_OK);
    CHECK(count_lines(read_file(all_dir / "run_index.csv")) == 1 + 4);
    fs::remove_all(all_dir);
  }
  SUBCASE("unknown variant names are rejected") {
    sn_batch_options bad = options;
    bad.variants = "rrt-star,dijkstra";
    CHECK(sn_batch(plan.scenario, &bad) == SN_ERR_INVALID_ARG);
    CHECK(std::string(sn_last_error()).find("dijkstra") !=
          std::string::npos);
  }
  SUBCASE("zero runs are rejected") {
    sn_batch_options bad = options;
    bad.runs = 0;
    CHECK(sn_batch(plan.scenario, &bad) == SN_ERR_INVALID_ARG);
  }
  fs::remove_all(dir);
}

TEST_CASE("render and field export write non-empty files") {
  const SharedPlan& plan = shared_plan();
  const fs::path dir = make_temp_dir("files");

  const fs::path svg = dir / "scene.svg";
  REQUIRE(sn_render_svg(plan.scenario, plan.result, svg.string().c_str()) ==
          SN_OK);
  const std::string svg_text = read_file(svg);
  CHECK(svg_text.rfind("<svg", 0) == 0);
  CHECK(svg_text.find("<polyline") != std::string::npos);

  const fs::path grid = dir / "field.csv";
  REQUIRE(sn_export_agf_csv(plan.scenario, 0.5, grid.string().c_str()) ==
          SN_OK);
  const std::string grid_text = read_file(grid);
  CHECK(grid_text.rfind("#", 0) == 0);
  CHECK(count_lines(grid_text) == 2 + 24);  // two header lines + rows

  SUBCASE("non-positive cell size is rejected") {
    CHECK(sn_export_agf_csv(plan.scenario, 0.0, grid.string().c_str()) ==
          SN_ERR_INVALID_ARG);
  }
  fs::remove_all(dir);
}
