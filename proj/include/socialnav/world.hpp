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

#ifndef SOCIALNAV_WORLD_HPP_
#define SOCIALNAV_WORLD_HPP_

#include <vector>

#include "socialnav/geometry.hpp"
#include "socialnav/model.hpp"
#include "socialnav/social.hpp"

namespace socialnav {

/// Static environment: rectangular bounds plus axis-aligned rectangle and
/// disc obstacles. segment_inflation optionally widens the zero-width link
/// and object segments for collision checks.
struct WorldMap {
  Rect bounds;
  std::vector<Rect> rect_obstacles;
  std::vector<Disc> disc_obstacles;
  double segment_inflation = 0.0;
};

/// Whole-body validity: the base disc and every body point stay inside the
/// bounds, and no body element (base disc, link segments, object segments)
/// intersects an obstacle or a person's body disc.
bool is_valid(const Configuration& q, const WorldMap& world,
              const SocialField& field, const RobotGeometry& robot,
              const ObjectGeometry& obj);

/// Edge validity: is_valid at every configuration of the uniform
/// interpolation between qa and qb at the given resolution. Discrete
/// checking only; a coarse resolution can miss thin obstacles.
bool collision_free(const Configuration& qa, const Configuration& qb,
                    const WorldMap& world, const SocialField& field,
                    const RobotGeometry& robot, const ObjectGeometry& obj,
                    double resolution, double angular_weight = 1.0);

}  // namespace socialnav

#endif  // SOCIALNAV_WORLD_HPP_
