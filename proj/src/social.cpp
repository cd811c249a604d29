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

#include "socialnav/social.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace socialnav {

double agf_raw(const Person& p, double x, double y) {
  const double dx = x - p.x;
  const double dy = y - p.y;
  // atan2(0, 0) is taken as 0; the value below is 1 in either branch there.
  const double alpha =
      wrap_angle(std::atan2(dy, dx) - p.theta + std::numbers::pi / 2.0);
  const double sigma = (alpha <= 0.0) ? p.sigma_r : p.sigma_h;
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  const double s2t = std::sin(2.0 * p.theta);
  const double a = (ct * ct) / (2.0 * sigma * sigma) +
                   (st * st) / (2.0 * p.sigma_s * p.sigma_s);
  const double b = s2t / (4.0 * sigma * sigma) -
                   s2t / (4.0 * p.sigma_s * p.sigma_s);
  const double c = (st * st) / (2.0 * sigma * sigma) +
                   (ct * ct) / (2.0 * p.sigma_s * p.sigma_s);
  return std::exp(-(a * dx * dx + 2.0 * b * dx * dy + c * dy * dy));
}

double agf(const Person& p, double x, double y) {
  const double v = agf_raw(p, x, y);
  return v <= p.tau ? 0.0 : v;
}

namespace {

double field_cost_at(const SocialField& field, const BodyPoints& pts,
                     const InterestPointSet& ipts) {
  double sum = 0.0;
  for (const Person& person : field.persons) {
    for (const InterestPoint& ip : ipts.entries) {
      if (ip.weight == 0.0) continue;
      const Vec2 p = body_point(pts, ip);
      sum += ip.weight * agf(person, p.x, p.y);
    }
  }
  return sum;
}

}  // namespace

double multi_point_cost(const SocialField& field, const Configuration& q,
                        const InterestPointSet& pts,
                        const RobotGeometry& robot,
                        const ObjectGeometry& obj) {
  if (field.persons.empty() || pts.entries.empty()) return 0.0;
  BodyPoints body;
  forward_points_into(q, robot, obj, body);
  return field_cost_at(field, body, pts);
}

double motion_social_cost(const SocialField& field, const Configuration& qa,
                          const Configuration& qb, const InterestPointSet& pts,
                          const RobotGeometry& robot, const ObjectGeometry& obj,
                          double resolution, double angular_weight) {
  if (field.persons.empty()) return 0.0;
  const double dist = config_distance(qa, qb, angular_weight);
  if (dist == 0.0) return 0.0;
  const int n = interpolation_steps(dist, resolution);
  const double step = dist / (n - 1);

  BodyPoints body;
  forward_points_into(qa, robot, obj, body);
  double prev = field_cost_at(field, body, pts);
  double total = 0.0;
  for (int j = 1; j < n; ++j) {
    const Configuration qj =
        config_lerp(qa, qb, static_cast<double>(j) / (n - 1));
    forward_points_into(qj, robot, obj, body);
    const double cur = field_cost_at(field, body, pts);
    total += 0.5 * step * (cur + prev);
    prev = cur;
  }
  return total;
}

void write_agf_grid_csv(const SocialField& field, const Rect& bounds,
                        double cell_size, std::ostream& out) {
  const int nx = std::max(1, static_cast<int>(std::ceil(
                                 bounds.width() / cell_size)));
  const int ny = std::max(1, static_cast<int>(std::ceil(
                                 bounds.height() / cell_size)));
  out << "# social field raster: sum of thresholded personal-space"
         " intensities (unitless), sampled at cell centers\n";
  out << "# bounds_m: " << bounds.lo.x << ' ' << bounds.lo.y << ' '
      << bounds.hi.x << ' ' << bounds.hi.y << "; cell_m: " << cell_size
      << "; rows: " << ny << "; cols: " << nx
      << "; order: row-major, row 0 at lowest y\n";
  for (int iy = 0; iy < ny; ++iy) {
    const double y = bounds.lo.y + (iy + 0.5) * cell_size;
    for (int ix = 0; ix < nx; ++ix) {
      const double x = bounds.lo.x + (ix + 0.5) * cell_size;
      double v = 0.0;
      for (const Person& p : field.persons) v += agf(p, x, y);
      out << v;
      if (ix + 1 < nx) out << ',';
    }
    out << '\n';
  }
}

}  // namespace socialnav
