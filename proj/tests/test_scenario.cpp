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

#include "socialnav/scenario.hpp"

#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_support.hpp"

namespace socialnav {
namespace {

void check_throws_with(const std::string& json_text,
                       const std::string& needle) {
  try {
    parse_scenario(json_text);
    FAIL_CHECK("expected a scenario error mentioning '" << needle << "'");
  } catch (const ScenarioError& e) {
    const std::string what = e.what();
    INFO("message: " << what);
    CHECK(what.find(needle) != std::string::npos);
  }
}

TEST_CASE("a minimal scenario fills in every default") {
  const Scenario s = parse_scenario(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json");

  CHECK(s.world.rect_obstacles.empty());
  CHECK(s.world.disc_obstacles.empty());
  CHECK(s.world.segment_inflation == 0.0);
  CHECK(s.field.persons.empty());
  CHECK(s.robot.base_radius == 0.3);
  CHECK(s.robot.link1_length == 1.0);
  CHECK(s.robot.wheel_radius == 0.1);
  REQUIRE(s.object.polyline.size() == 1);
  CHECK(s.object.polyline[0].x == 0.5);

  // Default interest points: base, both tips, and each object vertex.
  REQUIRE(s.interest_points.entries.size() == 4);
  CHECK(s.interest_points.entries[0].kind == PointKind::kBase);
  CHECK(s.interest_points.entries[3].kind == PointKind::kObject);
  for (const InterestPoint& e : s.interest_points.entries) {
    CHECK(e.weight == 1.0);
  }

  CHECK(s.planner.iterations == 2000);
  CHECK(s.planner.length_weight == 0.001);
  CHECK(s.planner.goal_radius == 1.5);
  CHECK(s.control.kp == 1.5);
  CHECK(s.control.dt == 0.02);
  CHECK(s.goal_base.x == 8.0);
}

TEST_CASE("person defaults derive from the frontal variance") {
  const Scenario s = parse_scenario(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "persons": [
      {"position": [5, 5]},
      {"position": [7, 7], "orientation": 1.0, "sigma_h": 3.0}
    ],
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 2]
  })json");

  REQUIRE(s.field.persons.size() == 2);
  const Person& a = s.field.persons[0];
  CHECK(a.theta == 0.0);
  CHECK(a.sigma_h == 2.0);
  CHECK(a.sigma_s == doctest::Approx(4.0 / 3.0));
  CHECK(a.sigma_r == doctest::Approx(1.0));
  CHECK(a.tau == 0.2);
  CHECK(a.body_radius == 0.3);

  const Person& b = s.field.persons[1];
  CHECK(b.sigma_h == 3.0);
  CHECK(b.sigma_s == doctest::Approx(2.0));
  CHECK(b.sigma_r == doctest::Approx(1.5));
}

TEST_CASE("explicit interest points override the defaults") {
  const Scenario s = parse_scenario(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "object": {"polyline": [[-0.5, 0], [0.5, 0]]},
    "interest_points": [
      {"label": "base", "weight": 0.05},
      {"label": "object_1", "weight": 0.95}
    ],
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json");

  REQUIRE(s.interest_points.entries.size() == 2);
  CHECK(s.interest_points.entries[0].kind == PointKind::kBase);
  CHECK(s.interest_points.entries[0].weight == 0.05);
  CHECK(s.interest_points.entries[1].kind == PointKind::kObject);
  CHECK(s.interest_points.entries[1].object_index == 1);
  CHECK(s.interest_points.entries[1].weight == 0.95);
}

TEST_CASE("parse errors name the offending field") {
  // Unknown key.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}, "obstcles": []},
    "start": [2, 2, 0, 0],
    "goal_base": [8, 8]
  })json",
                    "obstcles");
  // Missing required key.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "goal_base": [8, 8]
  })json",
                    "start");
  // Malformed start tuple.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "start": [2, 2],
    "goal_base": [8, 8]
  })json",
                    "start");
  // Bad obstacle type.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]},
              "obstacles": [{"type": "triangle"}]},
    "start": [2, 2, 0, 0],
    "goal_base": [8, 8]
  })json",
                    "type");
  // Unknown interest-point label.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "interest_points": [{"label": "elbow"}],
    "start": [2, 2, 0, 0],
    "goal_base": [8, 8]
  })json",
                    "elbow");
  // Not JSON at all.
  CHECK_THROWS_AS(parse_scenario("not json"), ScenarioError);
}

TEST_CASE("validation names the violated rule") {
  // Goal outside the map.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [18, 8]
  })json",
                    "goal_base");
  // Start configuration colliding with an obstacle.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]},
              "obstacles": [{"type": "rect", "min": [1, 1], "max": [3, 3]}]},
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json",
                    "start");
  // Nonpositive person variance.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "persons": [{"position": [5, 5], "sigma_h": 0}],
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json",
                    "sigma");
  // Threshold at or above one.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "persons": [{"position": [5, 5], "tau": 1.0}],
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json",
                    "tau");
  // Negative interest-point weight.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "interest_points": [{"label": "base", "weight": -0.5}],
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json",
                    "weight");
  // Duplicate interest-point labels.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "interest_points": [{"label": "base"}, {"label": "base"}],
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json",
                    "duplicate");
  // Object index past the polyline.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "object": {"polyline": [[-0.5, 0], [0.5, 0]]},
    "interest_points": [{"label": "object_5"}],
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json",
                    "object index");
  // Nonpositive robot dimension.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [0, 0], "max": [10, 10]}},
    "robot": {"link1_length": -1},
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json",
                    "link1_length");
  // Inverted bounds.
  check_throws_with(R"json({
    "world": {"bounds": {"min": [10, 10], "max": [0, 0]}},
    "start": [2, 2, 0, 3.1415926],
    "goal_base": [8, 8]
  })json",
                    "bounds");
}

TEST_CASE("scenario files load through the same pipeline") {
  const auto dir = testing::make_temp_dir("scenario");
  const auto path = dir / "s.json";
  {
    std::ofstream out(path);
    out << testing::open_scenario_json();
  }
  const Scenario s = load_scenario(path.string());
  CHECK(s.planner.iterations == 300);

  CHECK_THROWS_AS(load_scenario((dir / "missing.json").string()),
                  ScenarioError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("plan results round-trip through JSON exactly") {
  PlanResult r;
  r.waypoints.push_back({0.1, 0.2, 0.3, 0.4});
  r.waypoints.push_back({1.0 / 3.0, 2.0 / 7.0, 5.1234567891234567, 6.0});
  r.waypoints.push_back({4.0, 4.0, 0.0, 1e-17});
  r.per_edge.push_back({0.125, 1.4142135623730951});
  r.per_edge.push_back({0.0, 2.7182818284590452});
  r.total_cost = 0.125 + 1.4142135623730951 + 2.7182818284590452;
  r.seed = 18446744073709551557ull;
  r.iterations_used = 2000;
  r.variant = Variant::kSocialInformed;

  const std::string text = plan_result_to_json(r);
  const PlanResult back = plan_result_from_json(text);

  REQUIRE(back.waypoints.size() == r.waypoints.size());
  for (std::size_t i = 0; i < r.waypoints.size(); ++i) {
    CHECK(back.waypoints[i] == r.waypoints[i]);
  }
  REQUIRE(back.per_edge.size() == r.per_edge.size());
  for (std::size_t i = 0; i < r.per_edge.size(); ++i) {
    CHECK(back.per_edge[i].social == r.per_edge[i].social);
    CHECK(back.per_edge[i].length == r.per_edge[i].length);
  }
  CHECK(back.total_cost == r.total_cost);
  CHECK(back.seed == r.seed);
  CHECK(back.iterations_used == r.iterations_used);
  CHECK(back.variant == r.variant);

  // Serialization itself is deterministic.
  CHECK(plan_result_to_json(back) == text);
}

TEST_CASE("stored plan files reject malformed content") {
  CHECK_THROWS_AS(plan_result_from_json("{}"), ScenarioError);
  CHECK_THROWS_AS(plan_result_from_json("[1,2,3]"), ScenarioError);
  // Edge count must match the waypoint count.
  CHECK_THROWS_AS(plan_result_from_json(R"json({
    "variant": "social",
    "seed": 1,
    "iterations_used": 10,
    "total_cost": 0.0,
    "waypoints": [[0, 0, 0, 0], [1, 0, 0, 0]],
    "edges": []
  })json"),
                  ScenarioError);

  const auto dir = testing::make_temp_dir("planio");
  PlanResult r;
  r.waypoints.push_back({1, 2, 3, 4});
  const auto path = dir / "plan.json";
  save_plan_result(r, path.string());
  const PlanResult back = load_plan_result(path.string());
  CHECK(back.waypoints.size() == 1);
  CHECK(back.waypoints[0] == r.waypoints[0]);
  CHECK_THROWS_AS(load_plan_result((dir / "nope.json").string()),
                  ScenarioError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace socialnav
