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

#include "socialnav/model.hpp"

#include <cmath>
#include <numbers>

namespace socialnav {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double a) {
  double r = std::remainder(a, kTwoPi);
  // std::remainder yields [-pi, pi]; fold the open end onto +pi.
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

double wrap_two_pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

BodyPoints forward_points(const Configuration& q, const RobotGeometry& robot,
                          const ObjectGeometry& obj) {
  BodyPoints out;
  forward_points_into(q, robot, obj, out);
  return out;
}

void forward_points_into(const Configuration& q, const RobotGeometry& robot,
                         const ObjectGeometry& obj, BodyPoints& out) {
  out.base = {q.x, q.y};
  const double c1 = std::cos(q.psi1);
  const double s1 = std::sin(q.psi1);
  out.link1_tip = {q.x + robot.link1_length * c1,
                   q.y + robot.link1_length * s1};
  const double a12 = q.psi1 + q.psi2;
  const double c12 = std::cos(a12);
  const double s12 = std::sin(a12);
  out.link2_tip = {out.link1_tip.x + robot.link2_length * c12,
                   out.link1_tip.y + robot.link2_length * s12};
  out.object.clear();
  out.object.reserve(obj.polyline.size());
  // Object frame: origin at the link-2 tip, x-axis along link 2.
  for (const Vec2& v : obj.polyline) {
    out.object.push_back({out.link2_tip.x + c12 * v.x - s12 * v.y,
                          out.link2_tip.y + s12 * v.x + c12 * v.y});
  }
}

Vec2 body_point(const BodyPoints& pts, const InterestPoint& p) {
  switch (p.kind) {
    case PointKind::kBase:
      return pts.base;
    case PointKind::kLink1Tip:
      return pts.link1_tip;
    case PointKind::kLink2Tip:
      return pts.link2_tip;
    case PointKind::kObject:
      return pts.object[static_cast<std::size_t>(p.object_index)];
  }
  return pts.base;
}

std::string point_label(const InterestPoint& p) {
  switch (p.kind) {
    case PointKind::kBase:
      return "base";
    case PointKind::kLink1Tip:
      return "link1_tip";
    case PointKind::kLink2Tip:
      return "link2_tip";
    case PointKind::kObject:
      return "object_" + std::to_string(p.object_index);
  }
  return "base";
}

double config_distance(const Configuration& a, const Configuration& b,
                       double angular_weight) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double d1 = wrap_angle(b.psi1 - a.psi1);
  const double d2 = wrap_angle(b.psi2 - a.psi2);
  return std::sqrt(dx * dx + dy * dy +
                   angular_weight * (d1 * d1 + d2 * d2));
}

Configuration config_lerp(const Configuration& a, const Configuration& b,
                          double t) {
  if (t <= 0.0) return a;
  if (t >= 1.0) return b;
  Configuration q;
  q.x = a.x + t * (b.x - a.x);
  q.y = a.y + t * (b.y - a.y);
  q.psi1 = wrap_two_pi(a.psi1 + t * wrap_angle(b.psi1 - a.psi1));
  q.psi2 = wrap_two_pi(a.psi2 + t * wrap_angle(b.psi2 - a.psi2));
  return q;
}

std::vector<Configuration> interpolate(const Configuration& a,
                                       const Configuration& b, int steps) {
  if (steps < 2) steps = 2;
  std::vector<Configuration> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out.push_back(config_lerp(a, b, static_cast<double>(i) / (steps - 1)));
  }
  return out;
}

int interpolation_steps(double segment_length, double resolution) {
  const double n = std::ceil(segment_length / resolution) + 1.0;
  if (!(n > 2.0)) return 2;
  return static_cast<int>(n);
}

}  // namespace socialnav
