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

#ifndef SOCIALNAV_MODEL_HPP_
#define SOCIALNAV_MODEL_HPP_

#include <string>
#include <vector>

#include "socialnav/geometry.hpp"

namespace socialnav {

/// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

/// Wrap an angle into [0, 2*pi).
double wrap_two_pi(double a);

/// Whole-body configuration of the mobile manipulator: planar base position
/// plus the two arm joints. psi1 is the first joint angle measured in the
/// world frame (the holonomic base carries no heading), psi2 is relative to
/// link 1. Joint angles are stored wrapped into [0, 2*pi).
struct Configuration {
  double x = 0.0;
  double y = 0.0;
  double psi1 = 0.0;
  double psi2 = 0.0;

  Configuration() = default;
  Configuration(double x_in, double y_in, double psi1_in, double psi2_in)
      : x(x_in), y(y_in), psi1(wrap_two_pi(psi1_in)),
        psi2(wrap_two_pi(psi2_in)) {}

  bool operator==(const Configuration& o) const = default;
};

/// Holonomic disc base with a 2-link planar arm. All lengths in meters and
/// strictly positive.
struct RobotGeometry {
  double base_radius = 0.3;
  double link1_length = 1.0;
  double link2_length = 1.0;
  double wheel_radius = 0.1;
};

/// Carried object as a polyline of offsets in the end-effector frame (origin
/// at the link-2 tip, x-axis along link 2). Consecutive offsets form the
/// object's rigid segments; a single offset is a point object.
struct ObjectGeometry {
  std::vector<Vec2> polyline;
};

enum class PointKind { kBase, kLink1Tip, kLink2Tip, kObject };

/// One weighted evaluation point on the body. object_index selects the
/// polyline vertex when kind == kObject.
struct InterestPoint {
  PointKind kind = PointKind::kBase;
  int object_index = 0;
  double weight = 1.0;
};

/// The manually selected body points at which social cost is evaluated,
/// with nonnegative weights. Labels must be unique and object indices must
/// refer to existing polyline vertices.
struct InterestPointSet {
  std::vector<InterestPoint> entries;
};

std::string point_label(const InterestPoint& p);

/// World positions of the base center, link tips, and object vertices.
struct BodyPoints {
  Vec2 base;
  Vec2 link1_tip;
  Vec2 link2_tip;
  std::vector<Vec2> object;
};

BodyPoints forward_points(const Configuration& q, const RobotGeometry& robot,
                          const ObjectGeometry& obj);

/// Same as forward_points but reuses the object vector's capacity.
void forward_points_into(const Configuration& q, const RobotGeometry& robot,
                         const ObjectGeometry& obj, BodyPoints& out);

Vec2 body_point(const BodyPoints& pts, const InterestPoint& p);

/// Norm of a configuration difference with wrapped angular terms:
/// sqrt(dx^2 + dy^2 + w*dpsi1^2 + w*dpsi2^2).
double config_distance(const Configuration& a, const Configuration& b,
                       double angular_weight = 1.0);

/// Point at parameter t in [0,1] on the straight configuration-space path
/// from a to b; angles follow the shortest wrapped arc. Endpoints are
/// returned bit-exact.
Configuration config_lerp(const Configuration& a, const Configuration& b,
                          double t);

/// Uniform N-step interpolation from a to b, endpoints included. N >= 2.
std::vector<Configuration> interpolate(const Configuration& a,
                                       const Configuration& b, int steps);

/// Number of interpolation steps for a segment of the given length at the
/// given spatial resolution: max(2, ceil(length/resolution) + 1).
int interpolation_steps(double segment_length, double resolution);

}  // namespace socialnav

#endif  // SOCIALNAV_MODEL_HPP_
