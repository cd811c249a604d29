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

#ifndef SOCIALNAV_SOCIAL_HPP_
#define SOCIALNAV_SOCIAL_HPP_

#include <iosfwd>

#include "socialnav/geometry.hpp"
#include "socialnav/model.hpp"

namespace socialnav {

/// A standing person with an asymmetric Gaussian personal-space model:
/// variance sigma_h ahead, sigma_s to the sides, sigma_r behind, and a
/// public-space cutoff tau. body_radius is the collision disc.
struct Person {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double sigma_h = 2.0;
  double sigma_s = 2.0 * (2.0 / 3.0);
  double sigma_r = 2.0 * 0.5;
  double tau = 0.2;
  double body_radius = 0.3;
};

struct SocialField {
  std::vector<Person> persons;
};

/// Raw asymmetric Gaussian intensity of one person at (x, y), in (0, 1].
/// Equals 1 exactly at the person position.
double agf_raw(const Person& p, double x, double y);

/// Thresholded intensity: 0 when agf_raw <= tau, agf_raw otherwise.
double agf(const Person& p, double x, double y);

/// Weighted multi-point social cost of a whole-body configuration:
/// sum over persons and interest points of w_j * agf(point_j).
double multi_point_cost(const SocialField& field, const Configuration& q,
                        const InterestPointSet& pts,
                        const RobotGeometry& robot, const ObjectGeometry& obj);

/// Social cost of moving from qa to qb: the line integral of the multi-point
/// cost over the configuration-space segment, evaluated with the trapezoidal
/// rule on a uniform interpolation at the given resolution.
double motion_social_cost(const SocialField& field, const Configuration& qa,
                          const Configuration& qb, const InterestPointSet& pts,
                          const RobotGeometry& robot, const ObjectGeometry& obj,
                          double resolution, double angular_weight = 1.0);

/// Sample the combined thresholded field (sum over persons) on a grid of
/// cell-center points and write it as row-major CSV. Row 0 is the lowest y.
void write_agf_grid_csv(const SocialField& field, const Rect& bounds,
                        double cell_size, std::ostream& out);

}  // namespace socialnav

#endif  // SOCIALNAV_SOCIAL_HPP_
