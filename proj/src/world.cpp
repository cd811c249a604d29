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

#include "socialnav/world.hpp"

namespace socialnav {

namespace {

bool disc_inside_bounds(const Disc& d, const Rect& bounds) {
  return d.center.x - d.radius >= bounds.lo.x &&
         d.center.x + d.radius <= bounds.hi.x &&
         d.center.y - d.radius >= bounds.lo.y &&
         d.center.y + d.radius <= bounds.hi.y;
}

// Collision set of one configuration: base disc plus zero-width segments for
// the links and the object polyline. A single-vertex object degenerates to a
// point (segment of zero length).
struct BodyElements {
  Disc base;
  // Each segment as an endpoint pair.
  std::vector<std::pair<Vec2, Vec2>> segments;
};

void build_elements(const BodyPoints& pts, double base_radius,
                    BodyElements& out) {
  out.base = {pts.base, base_radius};
  out.segments.clear();
  out.segments.emplace_back(pts.base, pts.link1_tip);
  out.segments.emplace_back(pts.link1_tip, pts.link2_tip);
  if (pts.object.size() == 1) {
    out.segments.emplace_back(pts.object[0], pts.object[0]);
  } else {
    for (std::size_t i = 0; i + 1 < pts.object.size(); ++i) {
      out.segments.emplace_back(pts.object[i], pts.object[i + 1]);
    }
  }
}

bool elements_valid(const BodyElements& body, const BodyPoints& pts,
                    const WorldMap& world, const SocialField& field) {
  if (!disc_inside_bounds(body.base, world.bounds)) return false;
  if (!world.bounds.contains(pts.link1_tip) ||
      !world.bounds.contains(pts.link2_tip)) {
    return false;
  }
  for (const Vec2& v : pts.object) {
    if (!world.bounds.contains(v)) return false;
  }

  const double inflation = world.segment_inflation;
  for (const Rect& r : world.rect_obstacles) {
    if (disc_intersects_rect(body.base, r)) return false;
    for (const auto& [a, b] : body.segments) {
      if (segment_intersects_rect(a, b, r, inflation)) return false;
    }
  }
  for (const Disc& d : world.disc_obstacles) {
    if (disc_intersects_disc(body.base, d)) return false;
    for (const auto& [a, b] : body.segments) {
      if (segment_intersects_disc(a, b, d, inflation)) return false;
    }
  }
  for (const Person& p : field.persons) {
    const Disc pd{{p.x, p.y}, p.body_radius};
    if (disc_intersects_disc(body.base, pd)) return false;
    for (const auto& [a, b] : body.segments) {
      if (segment_intersects_disc(a, b, pd, inflation)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_valid(const Configuration& q, const WorldMap& world,
              const SocialField& field, const RobotGeometry& robot,
              const ObjectGeometry& obj) {
  BodyPoints pts;
  forward_points_into(q, robot, obj, pts);
  BodyElements body;
  build_elements(pts, robot.base_radius, body);
  return elements_valid(body, pts, world, field);
}

bool collision_free(const Configuration& qa, const Configuration& qb,
                    const WorldMap& world, const SocialField& field,
                    const RobotGeometry& robot, const ObjectGeometry& obj,
                    double resolution, double angular_weight) {
  const double dist = config_distance(qa, qb, angular_weight);
  const int n = interpolation_steps(dist, resolution);
  BodyPoints pts;
  BodyElements body;
  for (int j = 0; j < n; ++j) {
    const Configuration qj =
        config_lerp(qa, qb, static_cast<double>(j) / (n - 1));
    forward_points_into(qj, robot, obj, pts);
    build_elements(pts, robot.base_radius, body);
    if (!elements_valid(body, pts, world, field)) return false;
  }
  return true;
}

}  // namespace socialnav
