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

#include "socialnav/control.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace socialnav {

Vec2 base_command(const Vec2& current, const Vec2& next_wp, double kp,
                  double v_max) {
  Vec2 v = (next_wp - current) * kp;
  const double speed = v.norm();
  if (speed > v_max && speed > 0.0) {
    v = v * (v_max / speed);
  }
  return v;
}

std::array<double, 4> wheel_velocities(double v_x, double v_y,
                                       double wheel_radius) {
  return {(v_x - v_y) / wheel_radius, (v_x + v_y) / wheel_radius,
          (-v_x + v_y) / wheel_radius, (-v_x - v_y) / wheel_radius};
}

JointState joint_step(const JointState& state, double target, double v_max,
                      double a_max, double dt) {
  const double error = wrap_angle(target - state.angle);
  const double dv_max = a_max * dt;

  // Close and slow enough that one more braked step lands on the target.
  if (std::abs(error) <= a_max * dt * dt &&
      std::abs(state.velocity) <= dv_max) {
    return {wrap_two_pi(target), 0.0};
  }

  // Fastest speed from which the joint can still brake to rest at the target.
  const double v_stop = std::sqrt(2.0 * a_max * std::abs(error));
  double v_des = std::copysign(std::min(v_max, v_stop), error);
  if (std::abs(error) < std::abs(v_des) * dt) {
    v_des = error / dt;  // do not step past the target inside one dt
  }

  const double dv = std::clamp(v_des - state.velocity, -dv_max, dv_max);
  const double velocity = state.velocity + dv;
  return {wrap_two_pi(state.angle + velocity * dt), velocity};
}

namespace {

struct WaypointErrors {
  double base = 0.0;
  double joint1 = 0.0;
  double joint2 = 0.0;
};

WaypointErrors errors_to(const Configuration& config,
                         const Configuration& target) {
  return {std::hypot(target.x - config.x, target.y - config.y),
          std::abs(wrap_angle(target.psi1 - config.psi1)),
          std::abs(wrap_angle(target.psi2 - config.psi2))};
}

bool accepted(const WaypointErrors& e, const ControlParams& params) {
  return e.base < params.accept_pos && e.joint1 < params.accept_ang &&
         e.joint2 < params.accept_ang;
}

}  // namespace

SimLog follow_path(const PlanResult& path, const ControlParams& params,
                   const WorldMap& world, const SocialField& field,
                   const RobotGeometry& robot, const ObjectGeometry& obj) {
  SimLog log;
  const auto& wps = path.waypoints;
  if (wps.empty()) return log;
  const int n = static_cast<int>(wps.size());

  Configuration config = wps[0];
  JointState joint1{config.psi1, 0.0};
  JointState joint2{config.psi2, 0.0};
  int wp = 0;

  // Waypoints are accepted before stepping, so waypoints already satisfied
  // by the current state (the start included) consume no simulation time.
  const auto advance = [&] {
    while (wp < n && accepted(errors_to(config, wps[wp]), params)) ++wp;
  };
  advance();

  SimState initial;
  initial.config = config;
  initial.waypoint_index = std::min(wp, n - 1);
  log.states.push_back(initial);
  if (!is_valid(config, world, field, robot, obj)) ++log.invalid_states;

  long step = 0;
  while (wp < n) {
    const double time = static_cast<double>(step) * params.dt;
    if (time >= params.horizon) {
      log.timed_out = true;
      break;
    }
    const Configuration& target = wps[wp];

    const Vec2 v = base_command({config.x, config.y}, {target.x, target.y},
                                params.kp, params.v_max);
    joint1 = joint_step(joint1, target.psi1, params.joint_v_max,
                        params.joint_a_max, params.dt);
    joint2 = joint_step(joint2, target.psi2, params.joint_v_max,
                        params.joint_a_max, params.dt);

    config.x += v.x * params.dt;
    config.y += v.y * params.dt;
    config.psi1 = joint1.angle;
    config.psi2 = joint2.angle;
    ++step;

    SimState s;
    s.time = static_cast<double>(step) * params.dt;
    s.config = config;
    s.base_velocity = v;
    s.joint_velocities = {joint1.velocity, joint2.velocity};
    s.wheels = wheel_velocities(v.x, v.y, robot.wheel_radius);
    advance();
    s.waypoint_index = std::min(wp, n - 1);
    log.states.push_back(s);
    if (!is_valid(config, world, field, robot, obj)) ++log.invalid_states;
  }

  const WaypointErrors final_err = errors_to(config, wps.back());
  log.final_base_error = final_err.base;
  log.final_joint_errors = {final_err.joint1, final_err.joint2};
  return log;
}

void write_trajectory_csv(const SimLog& log, std::ostream& out) {
  out << "time (s),x (m),y (m),psi1 (rad),psi2 (rad),vx (m/s),vy (m/s),"
         "wheel1 (rad/s),wheel2 (rad/s),wheel3 (rad/s),wheel4 (rad/s),"
         "joint1_vel (rad/s),joint2_vel (rad/s),waypoint_index\n";
  const auto flags = out.flags();
  out.precision(17);
  for (const SimState& s : log.states) {
    out << s.time << ',' << s.config.x << ',' << s.config.y << ','
        << s.config.psi1 << ',' << s.config.psi2 << ',' << s.base_velocity.x
        << ',' << s.base_velocity.y;
    for (double w : s.wheels) out << ',' << w;
    out << ',' << s.joint_velocities[0] << ',' << s.joint_velocities[1] << ','
        << s.waypoint_index << '\n';
  }
  out.flags(flags);
}

}  // namespace socialnav
