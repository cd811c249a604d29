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

#ifndef SOCIALNAV_CONTROL_HPP_
#define SOCIALNAV_CONTROL_HPP_

#include <array>
#include <iosfwd>
#include <vector>

#include "socialnav/model.hpp"
#include "socialnav/planner.hpp"
#include "socialnav/world.hpp"

namespace socialnav {

struct ControlParams {
  double kp = 1.5;           // proportional gain on base position error
  double dt = 0.02;          // integration step, s
  double v_max = 1.0;        // base speed cap, m/s
  double joint_v_max = 1.0;  // per-joint velocity limit, rad/s
  double joint_a_max = 2.0;  // per-joint acceleration limit, rad/s^2
  double accept_pos = 0.05;  // waypoint acceptance, base position, m
  double accept_ang = 0.02;  // waypoint acceptance, per joint, rad
  double horizon = 600.0;    // simulated time budget, s
};

/// Proportional velocity command toward the next waypoint, magnitude-clamped
/// to v_max.
Vec2 base_command(const Vec2& current, const Vec2& next_wp, double kp,
                  double v_max);

/// Four-wheel omnidirectional mapping of a base velocity:
/// (v1..v4) = (vx-vy, vx+vy, -vx+vy, -vx-vy) / r.
std::array<double, 4> wheel_velocities(double v_x, double v_y,
                                       double wheel_radius);

struct JointState {
  double angle = 0.0;  // wrapped to [0, 2*pi)
  double velocity = 0.0;
};

/// One dt step of a trapezoidal velocity profile along the shortest wrapped
/// arc to target, bounded by v_max and a_max. Reaches the target with zero
/// velocity in finite time.
JointState joint_step(const JointState& state, double target, double v_max,
                      double a_max, double dt);

struct SimState {
  double time = 0.0;
  Configuration config;
  Vec2 base_velocity;
  std::array<double, 2> joint_velocities{0.0, 0.0};
  std::array<double, 4> wheels{0.0, 0.0, 0.0, 0.0};
  int waypoint_index = 0;
};

struct SimLog {
  std::vector<SimState> states;
  bool timed_out = false;
  double final_base_error = 0.0;
  std::array<double, 2> final_joint_errors{0.0, 0.0};
  // Simulated states failing whole-body validity. Small counts can occur on
  // valid plans: base and joints progress on independent profiles, so the
  // executed pose can briefly leave the planned swept volume near clutter or
  // the world edge.
  int invalid_states = 0;
};

/// Closed-loop waypoint following of a planned path in the kinematic
/// simulator. Advances to the next waypoint only once the base is within
/// accept_pos and both joints within accept_ang.
SimLog follow_path(const PlanResult& path, const ControlParams& params,
                   const WorldMap& world, const SocialField& field,
                   const RobotGeometry& robot, const ObjectGeometry& obj);

/// Timestamped trajectory log with wheel speeds, one row per state.
void write_trajectory_csv(const SimLog& log, std::ostream& out);

}  // namespace socialnav

#endif  // SOCIALNAV_CONTROL_HPP_
