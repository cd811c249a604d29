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

#ifndef SOCIALNAV_SCENARIO_HPP_
#define SOCIALNAV_SCENARIO_HPP_

#include <stdexcept>
#include <string>

#include "socialnav/control.hpp"
#include "socialnav/model.hpp"
#include "socialnav/planner.hpp"
#include "socialnav/social.hpp"
#include "socialnav/world.hpp"

namespace socialnav {

/// Raised on scenario parse or validation failures. The message names the
/// offending field or invariant.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A complete problem instance: environment, persons, robot and object
/// geometry, weighted interest points, start and goal, and parameter sets.
struct Scenario {
  WorldMap world;
  SocialField field;
  RobotGeometry robot;
  ObjectGeometry object;
  InterestPointSet interest_points;
  Configuration start;
  Vec2 goal_base;
  PlannerParams planner;
  ControlParams control;
};

/// Parse a scenario from JSON text. `origin` names the source in error
/// messages. Applies documented defaults, then validates.
Scenario parse_scenario(const std::string& json_text,
                        const std::string& origin = "<string>");

/// Load and validate a scenario file.
Scenario load_scenario(const std::string& path);

/// Checks every scenario invariant; throws ScenarioError naming the first
/// violation.
void validate_scenario(const Scenario& s);

std::string plan_result_to_json(const PlanResult& result);
PlanResult plan_result_from_json(const std::string& json_text);
void save_plan_result(const PlanResult& result, const std::string& path);
PlanResult load_plan_result(const std::string& path);

}  // namespace socialnav

#endif  // SOCIALNAV_SCENARIO_HPP_
