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

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

namespace socialnav {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
  throw ScenarioError(origin + ": " + message);
}

// Rejects keys outside the documented schema so typos surface as errors
// instead of silently falling back to defaults.
void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& path, const std::string& origin) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(origin, path + ": unknown key \"" + item.key() + "\"");
    }
  }
}

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& require(const json& obj, const char* key, const std::string& path,
                    const std::string& origin) {
  const json* j = find(obj, key);
  if (!j) fail(origin, path + ": missing required key \"" + key + "\"");
  return *j;
}

double as_number(const json& j, const std::string& path,
                 const std::string& origin) {
  if (!j.is_number()) fail(origin, path + ": expected a number");
  return j.get<double>();
}

double number_or(const json& obj, const char* key, double fallback,
                 const std::string& path, const std::string& origin) {
  const json* j = find(obj, key);
  return j ? as_number(*j, path + "." + key, origin) : fallback;
}

int as_int(const json& j, const std::string& path, const std::string& origin) {
  if (!j.is_number_integer()) fail(origin, path + ": expected an integer");
  return j.get<int>();
}

std::uint64_t as_u64(const json& j, const std::string& path,
                     const std::string& origin) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  fail(origin, path + ": expected a non-negative integer");
}

Vec2 as_vec2(const json& j, const std::string& path,
             const std::string& origin) {
  if (!j.is_array() || j.size() != 2) {
    fail(origin, path + ": expected an array of 2 numbers");
  }
  return {as_number(j[0], path + "[0]", origin),
          as_number(j[1], path + "[1]", origin)};
}

WorldMap parse_world(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "world: expected an object");
  check_keys(j, {"bounds", "obstacles", "segment_inflation"}, "world", origin);

  WorldMap world;
  const json& bounds = require(j, "bounds", "world", origin);
  if (!bounds.is_object()) fail(origin, "world.bounds: expected an object");
  check_keys(bounds, {"min", "max"}, "world.bounds", origin);
  world.bounds.lo =
      as_vec2(require(bounds, "min", "world.bounds", origin),
              "world.bounds.min", origin);
  world.bounds.hi =
      as_vec2(require(bounds, "max", "world.bounds", origin),
              "world.bounds.max", origin);
  world.segment_inflation =
      number_or(j, "segment_inflation", 0.0, "world", origin);

  if (const json* obstacles = find(j, "obstacles")) {
    if (!obstacles->is_array()) {
      fail(origin, "world.obstacles: expected an array");
    }
    for (std::size_t i = 0; i < obstacles->size(); ++i) {
      const json& o = (*obstacles)[i];
      const std::string path = "world.obstacles[" + std::to_string(i) + "]";
      if (!o.is_object()) fail(origin, path + ": expected an object");
      const json& type = require(o, "type", path, origin);
      if (!type.is_string()) fail(origin, path + ".type: expected a string");
      const std::string kind = type.get<std::string>();
      if (kind == "rect") {
        check_keys(o, {"type", "min", "max"}, path, origin);
        Rect r;
        r.lo = as_vec2(require(o, "min", path, origin), path + ".min", origin);
        r.hi = as_vec2(require(o, "max", path, origin), path + ".max", origin);
        world.rect_obstacles.push_back(r);
      } else if (kind == "disc") {
        check_keys(o, {"type", "center", "radius"}, path, origin);
        Disc d;
        d.center = as_vec2(require(o, "center", path, origin),
                           path + ".center", origin);
        d.radius = as_number(require(o, "radius", path, origin),
                             path + ".radius", origin);
        world.disc_obstacles.push_back(d);
      } else {
        fail(origin, path + ".type: expected \"rect\" or \"disc\"");
      }
    }
  }
  return world;
}

SocialField parse_persons(const json& j, const std::string& origin) {
  SocialField field;
  if (!j.is_array()) fail(origin, "persons: expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& p = j[i];
    const std::string path = "persons[" + std::to_string(i) + "]";
    if (!p.is_object()) fail(origin, path + ": expected an object");
    check_keys(p,
               {"position", "orientation", "sigma_h", "sigma_s", "sigma_r",
                "tau", "body_radius"},
               path, origin);
    Person person;
    const Vec2 pos = as_vec2(require(p, "position", path, origin),
                             path + ".position", origin);
    person.x = pos.x;
    person.y = pos.y;
    person.theta = number_or(p, "orientation", 0.0, path, origin);
    person.sigma_h = number_or(p, "sigma_h", 2.0, path, origin);
    // The side and rear spreads scale off the frontal one unless given.
    person.sigma_s =
        number_or(p, "sigma_s", (2.0 / 3.0) * person.sigma_h, path, origin);
    person.sigma_r =
        number_or(p, "sigma_r", 0.5 * person.sigma_h, path, origin);
    person.tau = number_or(p, "tau", 0.2, path, origin);
    person.body_radius = number_or(p, "body_radius", 0.3, path, origin);
    field.persons.push_back(person);
  }
  return field;
}

RobotGeometry parse_robot(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "robot: expected an object");
  check_keys(j, {"base_radius", "link1_length", "link2_length",
                 "wheel_radius"},
             "robot", origin);
  RobotGeometry robot;
  robot.base_radius =
      number_or(j, "base_radius", robot.base_radius, "robot", origin);
  robot.link1_length =
      number_or(j, "link1_length", robot.link1_length, "robot", origin);
  robot.link2_length =
      number_or(j, "link2_length", robot.link2_length, "robot", origin);
  robot.wheel_radius =
      number_or(j, "wheel_radius", robot.wheel_radius, "robot", origin);
  return robot;
}

ObjectGeometry parse_object(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "object: expected an object");
  check_keys(j, {"polyline"}, "object", origin);
  const json& poly = require(j, "polyline", "object", origin);
  if (!poly.is_array() || poly.empty()) {
    fail(origin, "object.polyline: expected a non-empty array of points");
  }
  ObjectGeometry obj;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    obj.polyline.push_back(as_vec2(
        poly[i], "object.polyline[" + std::to_string(i) + "]", origin));
  }
  return obj;
}

InterestPoint parse_point_label(const std::string& label,
                                const std::string& path,
                                const std::string& origin) {
  if (label == "base") return {PointKind::kBase, 0, 1.0};
  if (label == "link1_tip") return {PointKind::kLink1Tip, 0, 1.0};
  if (label == "link2_tip") return {PointKind::kLink2Tip, 0, 1.0};
  if (label.starts_with("object_")) {
    const std::string digits = label.substr(7);
    int index = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() &&
        index >= 0) {
      return {PointKind::kObject, index, 1.0};
    }
  }
  fail(origin, path + ": unknown label \"" + label +
                   "\" (expected base, link1_tip, link2_tip, or object_<k>)");
}

InterestPointSet parse_interest_points(const json& j,
                                       const std::string& origin) {
  if (!j.is_array()) fail(origin, "interest_points: expected an array");
  InterestPointSet set;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    const std::string path = "interest_points[" + std::to_string(i) + "]";
    if (!e.is_object()) fail(origin, path + ": expected an object");
    check_keys(e, {"label", "weight"}, path, origin);
    const json& label = require(e, "label", path, origin);
    if (!label.is_string()) fail(origin, path + ".label: expected a string");
    InterestPoint p =
        parse_point_label(label.get<std::string>(), path + ".label", origin);
    p.weight = number_or(e, "weight", 1.0, path, origin);
    set.entries.push_back(p);
  }
  return set;
}

InterestPointSet default_interest_points(const ObjectGeometry& obj) {
  InterestPointSet set;
  set.entries.push_back({PointKind::kBase, 0, 1.0});
  set.entries.push_back({PointKind::kLink1Tip, 0, 1.0});
  set.entries.push_back({PointKind::kLink2Tip, 0, 1.0});
  for (std::size_t i = 0; i < obj.polyline.size(); ++i) {
    set.entries.push_back({PointKind::kObject, static_cast<int>(i), 1.0});
  }
  return set;
}

PlannerParams parse_planner(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "planner: expected an object");
  check_keys(j,
             {"iterations", "steer_range", "near_radius", "resolution",
              "length_weight", "seed", "goal_radius", "angular_weight"},
             "planner", origin);
  PlannerParams p;
  if (const json* v = find(j, "iterations")) {
    p.iterations = as_int(*v, "planner.iterations", origin);
  }
  p.steer_range = number_or(j, "steer_range", p.steer_range, "planner",
                            origin);
  p.near_radius = number_or(j, "near_radius", p.near_radius, "planner",
                            origin);
  p.resolution = number_or(j, "resolution", p.resolution, "planner", origin);
  p.length_weight =
      number_or(j, "length_weight", p.length_weight, "planner", origin);
  if (const json* v = find(j, "seed")) {
    p.seed = as_u64(*v, "planner.seed", origin);
  }
  p.goal_radius = number_or(j, "goal_radius", p.goal_radius, "planner",
                            origin);
  p.angular_weight =
      number_or(j, "angular_weight", p.angular_weight, "planner", origin);
  return p;
}

ControlParams parse_control(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "control: expected an object");
  check_keys(j,
             {"kp", "dt", "v_max", "joint_v_max", "joint_a_max", "accept_pos",
              "accept_ang", "horizon"},
             "control", origin);
  ControlParams c;
  c.kp = number_or(j, "kp", c.kp, "control", origin);
  c.dt = number_or(j, "dt", c.dt, "control", origin);
  c.v_max = number_or(j, "v_max", c.v_max, "control", origin);
  c.joint_v_max = number_or(j, "joint_v_max", c.joint_v_max, "control",
                            origin);
  c.joint_a_max = number_or(j, "joint_a_max", c.joint_a_max, "control",
                            origin);
  c.accept_pos = number_or(j, "accept_pos", c.accept_pos, "control", origin);
  c.accept_ang = number_or(j, "accept_ang", c.accept_ang, "control", origin);
  c.horizon = number_or(j, "horizon", c.horizon, "control", origin);
  return c;
}

void check_positive(double value, const char* field) {
  if (!(value > 0.0)) {
    throw ScenarioError(std::string(field) + ": must be positive");
  }
}

void check_non_negative(double value, const char* field) {
  if (!(value >= 0.0)) {
    throw ScenarioError(std::string(field) + ": must be non-negative");
  }
}

}  // namespace

void validate_scenario(const Scenario& s) {
  if (!(s.world.bounds.hi.x > s.world.bounds.lo.x) ||
      !(s.world.bounds.hi.y > s.world.bounds.lo.y)) {
    throw ScenarioError("world.bounds: must have positive area");
  }
  check_non_negative(s.world.segment_inflation, "world.segment_inflation");
  for (std::size_t i = 0; i < s.world.rect_obstacles.size(); ++i) {
    const Rect& r = s.world.rect_obstacles[i];
    if (r.hi.x < r.lo.x || r.hi.y < r.lo.y) {
      throw ScenarioError("world.obstacles[" + std::to_string(i) +
                          "]: max must not be below min");
    }
  }
  for (std::size_t i = 0; i < s.world.disc_obstacles.size(); ++i) {
    if (s.world.disc_obstacles[i].radius < 0.0) {
      throw ScenarioError("world.obstacles[" + std::to_string(i) +
                          "].radius: must be non-negative");
    }
  }

  for (std::size_t i = 0; i < s.field.persons.size(); ++i) {
    const Person& p = s.field.persons[i];
    const std::string path = "persons[" + std::to_string(i) + "]";
    if (!(p.sigma_h > 0.0) || !(p.sigma_s > 0.0) || !(p.sigma_r > 0.0)) {
      throw ScenarioError(path + ": sigma values must be positive");
    }
    if (!(p.tau >= 0.0) || !(p.tau < 1.0)) {
      throw ScenarioError(path + ".tau: must lie in [0, 1)");
    }
    if (p.body_radius < 0.0) {
      throw ScenarioError(path + ".body_radius: must be non-negative");
    }
  }

  check_positive(s.robot.base_radius, "robot.base_radius");
  check_positive(s.robot.link1_length, "robot.link1_length");
  check_positive(s.robot.link2_length, "robot.link2_length");
  check_positive(s.robot.wheel_radius, "robot.wheel_radius");

  if (s.object.polyline.empty()) {
    throw ScenarioError("object.polyline: must have at least one point");
  }

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < s.interest_points.entries.size(); ++i) {
    const InterestPoint& p = s.interest_points.entries[i];
    const std::string path = "interest_points[" + std::to_string(i) + "]";
    if (p.weight < 0.0) {
      throw ScenarioError(path + ".weight: must be non-negative");
    }
    if (p.kind == PointKind::kObject &&
        (p.object_index < 0 ||
         p.object_index >= static_cast<int>(s.object.polyline.size()))) {
      throw ScenarioError(path + ": object index " +
                          std::to_string(p.object_index) +
                          " outside the polyline");
    }
    if (!seen.insert(point_label(p)).second) {
      throw ScenarioError(path + ": duplicate label \"" + point_label(p) +
                          "\"");
    }
  }

  if (s.planner.iterations < 0) {
    throw ScenarioError("planner.iterations: must be non-negative");
  }
  check_positive(s.planner.steer_range, "planner.steer_range");
  check_positive(s.planner.near_radius, "planner.near_radius");
  check_positive(s.planner.resolution, "planner.resolution");
  check_non_negative(s.planner.length_weight, "planner.length_weight");
  check_positive(s.planner.goal_radius, "planner.goal_radius");
  check_non_negative(s.planner.angular_weight, "planner.angular_weight");

  check_positive(s.control.kp, "control.kp");
  check_positive(s.control.dt, "control.dt");
  check_positive(s.control.v_max, "control.v_max");
  check_positive(s.control.joint_v_max, "control.joint_v_max");
  check_positive(s.control.joint_a_max, "control.joint_a_max");
  check_positive(s.control.accept_pos, "control.accept_pos");
  check_positive(s.control.accept_ang, "control.accept_ang");
  check_positive(s.control.horizon, "control.horizon");

  if (!s.world.bounds.contains(s.goal_base)) {
    throw ScenarioError("goal_base: outside world.bounds");
  }
  if (!is_valid(s.start, s.world, s.field, s.robot, s.object)) {
    throw ScenarioError("start: configuration is in collision or out of"
                        " bounds");
  }
}

Scenario parse_scenario(const std::string& json_text,
                        const std::string& origin) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(origin + ": " + e.what());
  }
  if (!root.is_object()) fail(origin, "top level: expected an object");
  check_keys(root,
             {"world", "persons", "robot", "object", "interest_points",
              "start", "goal_base", "planner", "control"},
             "top level", origin);

  Scenario s;
  s.world = parse_world(require(root, "world", "top level", origin), origin);
  if (const json* j = find(root, "persons")) {
    s.field = parse_persons(*j, origin);
  }
  if (const json* j = find(root, "robot")) {
    s.robot = parse_robot(*j, origin);
  }
  if (const json* j = find(root, "object")) {
    s.object = parse_object(*j, origin);
  } else {
    s.object.polyline = {{0.5, 0.0}};  // a point carried half a meter out
  }
  if (const json* j = find(root, "interest_points")) {
    s.interest_points = parse_interest_points(*j, origin);
  } else {
    s.interest_points = default_interest_points(s.object);
  }

  const json& start = require(root, "start", "top level", origin);
  if (!start.is_array() || start.size() != 4) {
    fail(origin, "start: expected an array of 4 numbers (x, y, psi1, psi2)");
  }
  s.start = Configuration(as_number(start[0], "start[0]", origin),
                          as_number(start[1], "start[1]", origin),
                          as_number(start[2], "start[2]", origin),
                          as_number(start[3], "start[3]", origin));
  s.goal_base = as_vec2(require(root, "goal_base", "top level", origin),
                        "goal_base", origin);

  if (const json* j = find(root, "planner")) {
    s.planner = parse_planner(*j, origin);
  }
  if (const json* j = find(root, "control")) {
    s.control = parse_control(*j, origin);
  }

  try {
    validate_scenario(s);
  } catch (const ScenarioError& e) {
    throw ScenarioError(origin + ": " + e.what());
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open " + path + " for reading");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), path);
}

std::string plan_result_to_json(const PlanResult& result) {
  json j;
  j["variant"] = variant_name(result.variant);
  j["seed"] = result.seed;
  j["iterations"] = result.iterations_used;
  j["total_cost"] = result.total_cost;
  json waypoints = json::array();
  for (const Configuration& q : result.waypoints) {
    waypoints.push_back({q.x, q.y, q.psi1, q.psi2});
  }
  j["waypoints"] = std::move(waypoints);
  json edges = json::array();
  for (const EdgeRecord& e : result.per_edge) {
    edges.push_back({{"social", e.social}, {"length", e.length}});
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

PlanResult plan_result_from_json(const std::string& json_text) {
  const std::string origin = "plan result";
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(origin + ": " + e.what());
  }
  if (!root.is_object()) fail(origin, "top level: expected an object");
  check_keys(root,
             {"variant", "seed", "iterations", "total_cost", "waypoints",
              "edges"},
             "top level", origin);

  PlanResult result;
  const json& variant = require(root, "variant", "top level", origin);
  if (!variant.is_string()) fail(origin, "variant: expected a string");
  const auto parsed = parse_variant(variant.get<std::string>());
  if (!parsed) {
    fail(origin, "variant: unknown name \"" + variant.get<std::string>() +
                     "\"");
  }
  result.variant = *parsed;
  result.seed = as_u64(require(root, "seed", "top level", origin), "seed",
                       origin);
  result.iterations_used =
      as_int(require(root, "iterations", "top level", origin), "iterations",
             origin);
  result.total_cost = as_number(require(root, "total_cost", "top level",
                                        origin),
                                "total_cost", origin);

  const json& waypoints = require(root, "waypoints", "top level", origin);
  if (!waypoints.is_array() || waypoints.empty()) {
    fail(origin, "waypoints: expected a non-empty array");
  }
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    const json& w = waypoints[i];
    const std::string path = "waypoints[" + std::to_string(i) + "]";
    if (!w.is_array() || w.size() != 4) {
      fail(origin, path + ": expected an array of 4 numbers");
    }
    result.waypoints.emplace_back(as_number(w[0], path + "[0]", origin),
                                  as_number(w[1], path + "[1]", origin),
                                  as_number(w[2], path + "[2]", origin),
                                  as_number(w[3], path + "[3]", origin));
  }

  const json& edges = require(root, "edges", "top level", origin);
  if (!edges.is_array() || edges.size() + 1 != waypoints.size()) {
    fail(origin, "edges: expected one entry per waypoint pair");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    const std::string path = "edges[" + std::to_string(i) + "]";
    if (!e.is_object()) fail(origin, path + ": expected an object");
    check_keys(e, {"social", "length"}, path, origin);
    EdgeRecord record;
    record.social = as_number(require(e, "social", path, origin),
                              path + ".social", origin);
    record.length = as_number(require(e, "length", path, origin),
                              path + ".length", origin);
    result.per_edge.push_back(record);
  }
  return result;
}

void save_plan_result(const PlanResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioError("cannot open " + path + " for writing");
  out << plan_result_to_json(result);
  if (!out.good()) throw ScenarioError("failed writing " + path);
}

PlanResult load_plan_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open " + path + " for reading");
  std::ostringstream text;
  text << in.rdbuf();
  return plan_result_from_json(text.str());
}

}  // namespace socialnav
