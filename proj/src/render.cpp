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

#include "socialnav/render.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "socialnav/social.hpp"

namespace socialnav {

namespace {

constexpr double kPi = std::numbers::pi;

// All numbers go through one fixed format so reruns are byte-identical.
std::string num(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  std::string text = s.str();
  if (text == "-0.0000") text = "0.0000";
  return text;
}

void circle(std::ostream& out, const Vec2& c, double r,
            const std::string& style) {
  out << "  <circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\""
      << num(r) << "\" " << style << "/>\n";
}

void line(std::ostream& out, const Vec2& a, const Vec2& b,
          const std::string& style) {
  out << "  <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
      << num(b.x) << "\" y2=\"" << num(b.y) << "\" " << style << "/>\n";
}

// Radius of the comfort-field threshold contour in world direction phi.
// The field is exp(-Q(d)) for a quadratic Q, so the tau level set along a
// unit ray u solves r^2 Q(u) = -ln(tau).
double contour_radius(const Person& p, double phi) {
  const double alpha = wrap_angle(phi - p.theta + kPi / 2.0);
  const double sigma = alpha <= 0.0 ? p.sigma_r : p.sigma_h;
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  const double s2t = std::sin(2.0 * p.theta);
  const double a = ct * ct / (2.0 * sigma * sigma) +
                   st * st / (2.0 * p.sigma_s * p.sigma_s);
  const double b = s2t / (4.0 * sigma * sigma) -
                   s2t / (4.0 * p.sigma_s * p.sigma_s);
  const double c = st * st / (2.0 * sigma * sigma) +
                   ct * ct / (2.0 * p.sigma_s * p.sigma_s);
  const double ux = std::cos(phi);
  const double uy = std::sin(phi);
  const double q = a * ux * ux + 2.0 * b * ux * uy + c * uy * uy;
  return std::sqrt(-std::log(p.tau) / q);
}

void person_layer(std::ostream& out, const Person& p) {
  if (p.tau > 0.0 && p.tau < 1.0) {
    out << "  <polygon points=\"";
    constexpr int kSamples = 128;
    for (int i = 0; i < kSamples; ++i) {
      const double phi = 2.0 * kPi * i / kSamples;
      const double r = contour_radius(p, phi);
      if (i > 0) out << ' ';
      out << num(p.x + r * std::cos(phi)) << ',' << num(p.y + r * std::sin(phi));
    }
    out << "\" fill=\"#8f6aa8\" fill-opacity=\"0.12\" stroke=\"#8f6aa8\""
           " stroke-width=\"0.03\" stroke-dasharray=\"0.12 0.08\"/>\n";
  }
  circle(out, {p.x, p.y}, p.body_radius,
         "fill=\"#d9775e\" stroke=\"#8a3a24\" stroke-width=\"0.03\"");
  const Vec2 nose{p.x + p.body_radius * std::cos(p.theta),
                  p.y + p.body_radius * std::sin(p.theta)};
  line(out, {p.x, p.y}, nose, "stroke=\"#8a3a24\" stroke-width=\"0.05\"");
}

void pose_layer(std::ostream& out, const Configuration& q,
                const RobotGeometry& robot, const ObjectGeometry& obj) {
  const BodyPoints pts = forward_points(q, robot, obj);
  circle(out, pts.base, robot.base_radius,
         "fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.04\""
         " stroke-opacity=\"0.85\"");
  line(out, pts.base, pts.link1_tip,
       "stroke=\"#e08a2e\" stroke-width=\"0.06\"");
  line(out, pts.link1_tip, pts.link2_tip,
       "stroke=\"#e08a2e\" stroke-width=\"0.06\"");
  if (pts.object.size() == 1) {
    circle(out, pts.object[0], 0.07, "fill=\"#5aa7d6\"");
  } else {
    out << "  <polyline points=\"";
    for (std::size_t i = 0; i < pts.object.size(); ++i) {
      if (i > 0) out << ' ';
      out << num(pts.object[i].x) << ',' << num(pts.object[i].y);
    }
    out << "\" fill=\"none\" stroke=\"#5aa7d6\" stroke-width=\"0.07\"/>\n";
  }
}

}  // namespace

void write_svg(const Scenario& scenario, const PlanResult* path,
               std::ostream& out) {
  const Rect& b = scenario.world.bounds;
  const double margin = 0.5;
  const double view_w = b.width() + 2.0 * margin;
  const double view_h = b.height() + 2.0 * margin;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << num(90.0 * view_w) << "\" height=\"" << num(90.0 * view_h)
      << "\" viewBox=\"" << num(b.lo.x - margin) << ' '
      << num(-(b.hi.y + margin)) << ' ' << num(view_w) << ' ' << num(view_h)
      << "\">\n";
  // World coordinates are y-up; flip the y axis once for the whole scene.
  out << "<g transform=\"scale(1,-1)\">\n";

  out << "  <rect x=\"" << num(b.lo.x) << "\" y=\"" << num(b.lo.y)
      << "\" width=\"" << num(b.width()) << "\" height=\"" << num(b.height())
      << "\" fill=\"#fdfdf8\" stroke=\"#30343a\" stroke-width=\"0.05\"/>\n";

  for (const Rect& r : scenario.world.rect_obstacles) {
    out << "  <rect x=\"" << num(r.lo.x) << "\" y=\"" << num(r.lo.y)
        << "\" width=\"" << num(r.width()) << "\" height=\""
        << num(r.height())
        << "\" fill=\"#b8bec6\" stroke=\"#6b727c\" stroke-width=\"0.03\"/>\n";
  }
  for (const Disc& d : scenario.world.disc_obstacles) {
    circle(out, d.center, d.radius,
           "fill=\"#b8bec6\" stroke=\"#6b727c\" stroke-width=\"0.03\"");
  }

  for (const Person& p : scenario.field.persons) person_layer(out, p);

  // Start and goal markers under the path layer.
  circle(out, {scenario.start.x, scenario.start.y}, scenario.robot.base_radius,
         "fill=\"#f2c94c\" fill-opacity=\"0.9\" stroke=\"#8a6d1a\""
         " stroke-width=\"0.03\"");
  circle(out, scenario.goal_base, scenario.planner.goal_radius,
         "fill=\"none\" stroke=\"#2e9e44\" stroke-width=\"0.03\""
         " stroke-dasharray=\"0.15 0.1\"");
  circle(out, scenario.goal_base, 0.12, "fill=\"#2e9e44\"");

  if (path && !path->waypoints.empty()) {
    out << "  <polyline points=\"";
    for (std::size_t i = 0; i < path->waypoints.size(); ++i) {
      if (i > 0) out << ' ';
      out << num(path->waypoints[i].x) << ',' << num(path->waypoints[i].y);
    }
    out << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.06\"/>\n";

    const std::size_t n = path->waypoints.size();
    const std::size_t stride = std::max<std::size_t>(1, (n - 1) / 8);
    for (std::size_t i = 0; i < n; i += stride) {
      pose_layer(out, path->waypoints[i], scenario.robot, scenario.object);
    }
    if ((n - 1) % stride != 0) {
      pose_layer(out, path->waypoints[n - 1], scenario.robot,
                 scenario.object);
    }
  }

  out << "</g>\n</svg>\n";
}

std::string render_svg(const Scenario& scenario, const PlanResult* path) {
  std::ostringstream out;
  write_svg(scenario, path, out);
  return out.str();
}

}  // namespace socialnav
