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

#include "socialnav/planner.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "socialnav/scenario.hpp"

namespace socialnav {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool has_positive_weight(const InterestPointSet& pts) {
  for (const InterestPoint& p : pts.entries) {
    if (p.weight > 0.0) return true;
  }
  return false;
}

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::kRrtStar:
      return "rrt-star";
    case Variant::kSocial:
      return "social";
    case Variant::kSocialInformed:
      return "social-informed";
    case Variant::kSocialBaseOnly:
      return "social-base-only";
  }
  return "social";
}

std::optional<Variant> parse_variant(const std::string& name) {
  if (name == "rrt-star" || name == "rrt_star") return Variant::kRrtStar;
  if (name == "social") return Variant::kSocial;
  if (name == "social-informed" || name == "social_informed")
    return Variant::kSocialInformed;
  if (name == "social-base-only" || name == "social_base_only")
    return Variant::kSocialBaseOnly;
  return std::nullopt;
}

Configuration sample_random_state(const Rect& bounds, RngStream& rng) {
  const double x = rng.uniform(bounds.lo.x, bounds.hi.x);
  const double y = rng.uniform(bounds.lo.y, bounds.hi.y);
  const double psi1 = rng.uniform(0.0, kTwoPi);
  const double psi2 = rng.uniform(0.0, kTwoPi);
  return {x, y, psi1, psi2};
}

std::optional<Configuration> sample_informed(const Rect& bounds,
                                             RngStream& rng,
                                             const Vec2& start_base,
                                             const Vec2& goal_base,
                                             double c_best_len) {
  const double focal = distance(start_base, goal_base);
  if (c_best_len < focal) return std::nullopt;

  const Vec2 center = (start_base + goal_base) * 0.5;
  const double semi_major = 0.5 * c_best_len;
  const double semi_minor =
      0.5 * std::sqrt(std::max(0.0, c_best_len * c_best_len - focal * focal));
  const double angle = std::atan2(goal_base.y - start_base.y,
                                  goal_base.x - start_base.x);
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);

  Vec2 p = center;
  bool found = false;
  for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
    // Uniform over the unit disc, stretched to the ellipse axes.
    const double r = std::sqrt(rng.uniform());
    const double phi = rng.uniform(0.0, kTwoPi);
    const double ex = semi_major * r * std::cos(phi);
    const double ey = semi_minor * r * std::sin(phi);
    Vec2 cand{center.x + ca * ex - sa * ey, center.y + sa * ex + ca * ey};
    // Guard against roundoff pushing the focal sum just past the bound.
    for (int k = 0; k < 8; ++k) {
      if (distance(cand, start_base) + distance(cand, goal_base) <=
          c_best_len) {
        break;
      }
      cand = center + (cand - center) * (1.0 - 1e-12);
    }
    if (distance(cand, start_base) + distance(cand, goal_base) > c_best_len) {
      cand = center;
    }
    if (bounds.contains(cand)) {
      p = cand;
      found = true;
    }
  }
  // The center is inside the bounds whenever both foci are; use it as the
  // last resort for vanishingly small acceptance regions.
  const double psi1 = rng.uniform(0.0, kTwoPi);
  const double psi2 = rng.uniform(0.0, kTwoPi);
  return Configuration{p.x, p.y, psi1, psi2};
}

int nearest_node(const std::vector<TreeNode>& nodes, const Configuration& q,
                 double angular_weight) {
  int best = -1;
  double best_dist = kInf;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double d = config_distance(nodes[i].config, q, angular_weight);
    if (d < best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::vector<int> all_near(const std::vector<TreeNode>& nodes,
                          const Configuration& q, double near_radius,
                          double angular_weight) {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (config_distance(nodes[i].config, q, angular_weight) <= near_radius) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

Configuration steer(const Configuration& q_from, const Configuration& q_to,
                    double range, double angular_weight) {
  const double d = config_distance(q_from, q_to, angular_weight);
  if (d <= range) return q_to;
  return config_lerp(q_from, q_to, range / d);
}

double edge_cost(const Configuration& qa, const Configuration& qb,
                 const SocialField& field, const InterestPointSet& pts,
                 const RobotGeometry& robot, const ObjectGeometry& obj,
                 const PlannerParams& params) {
  const double social =
      motion_social_cost(field, qa, qb, pts, robot, obj, params.resolution,
                         params.angular_weight);
  return social + params.length_weight *
                      config_distance(qa, qb, params.angular_weight);
}

std::optional<PlanResult> get_path(const std::vector<TreeNode>& nodes,
                                   const Vec2& goal_base, double goal_radius) {
  int best = -1;
  double best_cost = kInf;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Vec2 base{nodes[i].config.x, nodes[i].config.y};
    if (distance(base, goal_base) <= goal_radius &&
        nodes[i].cost < best_cost) {
      best_cost = nodes[i].cost;
      best = static_cast<int>(i);
    }
  }
  if (best < 0) return std::nullopt;

  std::vector<int> chain;
  for (int idx = best; idx >= 0; idx = nodes[idx].parent) chain.push_back(idx);

  PlanResult result;
  result.total_cost = nodes[best].cost;
  result.waypoints.reserve(chain.size());
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    result.waypoints.push_back(nodes[*it].config);
  }
  // Edges in root-first order; chain is leaf-first.
  result.per_edge.reserve(chain.size() - 1);
  for (std::size_t i = chain.size() - 1; i > 0; --i) {
    const TreeNode& child = nodes[chain[i - 1]];
    result.per_edge.push_back({child.edge_social, child.edge_length});
  }
  return result;
}

Planner::Planner(const Scenario& scenario, const PlannerParams& params,
                 Variant variant)
    : scenario_(scenario),
      params_(params),
      variant_(variant),
      points_(scenario.interest_points),
      rng_(params.seed) {
  switch (variant_) {
    case Variant::kRrtStar:
      for (InterestPoint& p : points_.entries) p.weight = 0.0;
      params_.length_weight = 1.0;
      break;
    case Variant::kSocial:
      break;
    case Variant::kSocialInformed:
      informed_ = true;
      break;
    case Variant::kSocialBaseOnly: {
      bool has_base = false;
      for (InterestPoint& p : points_.entries) {
        const bool is_base = p.kind == PointKind::kBase;
        p.weight = is_base ? 1.0 : 0.0;
        has_base = has_base || is_base;
      }
      if (!has_base) {
        points_.entries.push_back({PointKind::kBase, 0, 1.0});
      }
      break;
    }
  }
  focal_distance_ = distance({scenario_.start.x, scenario_.start.y},
                             scenario_.goal_base);
  TreeNode root;
  root.config = scenario_.start;
  nodes_.push_back(root);
}

int Planner::best_goal_node() const {
  int best = -1;
  double best_cost = kInf;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Vec2 base{nodes_[i].config.x, nodes_[i].config.y};
    if (distance(base, scenario_.goal_base) <= params_.goal_radius &&
        nodes_[i].cost < best_cost) {
      best_cost = nodes_[i].cost;
      best = static_cast<int>(i);
    }
  }
  return best;
}

double Planner::base_path_length(int node_index) const {
  double len = 0.0;
  int idx = node_index;
  while (nodes_[idx].parent >= 0) {
    const TreeNode& n = nodes_[idx];
    const TreeNode& p = nodes_[n.parent];
    len += std::hypot(n.config.x - p.config.x, n.config.y - p.config.y);
    idx = n.parent;
  }
  return len;
}

void Planner::reparent(int child, int new_parent, double edge_social,
                       double edge_length) {
  TreeNode& c = nodes_[child];
  auto& siblings = nodes_[c.parent].children;
  std::erase(siblings, child);
  c.parent = new_parent;
  c.edge_social = edge_social;
  c.edge_length = edge_length;
  c.cost = nodes_[new_parent].cost + edge_social +
           params_.length_weight * edge_length;
  nodes_[new_parent].children.push_back(child);
  refresh_subtree_costs(child);
}

void Planner::refresh_subtree_costs(int node_index) {
  std::vector<int> stack(nodes_[node_index].children);
  while (!stack.empty()) {
    const int idx = stack.back();
    stack.pop_back();
    TreeNode& n = nodes_[idx];
    n.cost = nodes_[n.parent].cost + n.edge_social +
             params_.length_weight * n.edge_length;
    stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
}

double Planner::recompute_cost_from_root(int node_index) const {
  double cost = 0.0;
  int idx = node_index;
  while (nodes_[idx].parent >= 0) {
    const TreeNode& n = nodes_[idx];
    cost += edge_cost(nodes_[n.parent].config, n.config, scenario_.field,
                      points_, scenario_.robot, scenario_.object, params_);
    idx = n.parent;
  }
  return cost;
}

void Planner::iterate(int iteration) {
  Configuration q_rand;
  bool sampled = false;
  if (informed_) {
    const int incumbent = best_goal_node();
    if (incumbent >= 0) {
      // The geometric ellipse bound: the incumbent base-path length, kept
      // above the focal distance so the region stays nonempty.
      const double c_best =
          std::max(base_path_length(incumbent), focal_distance_);
      const auto s = sample_informed(scenario_.world.bounds, rng_,
                                     {scenario_.start.x, scenario_.start.y},
                                     scenario_.goal_base, c_best);
      if (s) {
        q_rand = *s;
        sampled = true;
      }
    }
  }
  if (!sampled) {
    q_rand = sample_random_state(scenario_.world.bounds, rng_);
  }

  const int nearest = nearest_node(nodes_, q_rand, params_.angular_weight);
  const Configuration q_new = steer(nodes_[nearest].config, q_rand,
                                    params_.steer_range,
                                    params_.angular_weight);

  if (is_valid(q_new, scenario_.world, scenario_.field, scenario_.robot,
               scenario_.object)) {
    const std::vector<int> near =
        all_near(nodes_, q_new, params_.near_radius, params_.angular_weight);
    const bool social_active = has_positive_weight(points_) &&
                               !scenario_.field.persons.empty();

    std::vector<double> near_social(near.size(), 0.0);
    std::vector<double> near_length(near.size(), 0.0);
    double c_min = kInf;
    int best_parent = -1;
    std::size_t best_slot = 0;
    for (std::size_t i = 0; i < near.size(); ++i) {
      const TreeNode& cand = nodes_[near[i]];
      near_length[i] =
          config_distance(cand.config, q_new, params_.angular_weight);
      near_social[i] =
          social_active
              ? motion_social_cost(scenario_.field, cand.config, q_new,
                                   points_, scenario_.robot, scenario_.object,
                                   params_.resolution, params_.angular_weight)
              : 0.0;
      const double cost = cand.cost + near_social[i] +
                          params_.length_weight * near_length[i];
      if (cost < c_min &&
          collision_free(cand.config, q_new, scenario_.world, scenario_.field,
                         scenario_.robot, scenario_.object, params_.resolution,
                         params_.angular_weight)) {
        c_min = cost;
        best_parent = near[i];
        best_slot = i;
      }
    }

    if (best_parent >= 0) {
      TreeNode node;
      node.config = q_new;
      node.parent = best_parent;
      node.edge_social = near_social[best_slot];
      node.edge_length = near_length[best_slot];
      node.cost = c_min;
      const int new_index = static_cast<int>(nodes_.size());
      nodes_.push_back(node);
      nodes_[best_parent].children.push_back(new_index);

      // Rewire: adopt any near node that gets cheaper through q_new. The
      // motion cost is symmetric on the fixed interpolation, so the values
      // from the parent search are reused.
      for (std::size_t i = 0; i < near.size(); ++i) {
        const int idx = near[i];
        if (idx == best_parent) continue;
        const double cand_cost = c_min + near_social[i] +
                                 params_.length_weight * near_length[i];
        if (cand_cost < nodes_[idx].cost &&
            collision_free(q_new, nodes_[idx].config, scenario_.world,
                           scenario_.field, scenario_.robot, scenario_.object,
                           params_.resolution, params_.angular_weight)) {
          reparent(idx, new_index, near_social[i], near_length[i]);
        }
      }
    }
  }

  if (trace_enabled_) {
    const int best = best_goal_node();
    trace_.push_back({iteration, nodes_.size(),
                      best >= 0 ? nodes_[best].cost : kInf});
  }
}

void Planner::run() {
  for (int k = 1; k <= params_.iterations; ++k) iterate(k);
}

std::optional<PlanResult> Planner::result() const {
  auto r = get_path(nodes_, scenario_.goal_base, params_.goal_radius);
  if (!r) return std::nullopt;
  r->seed = params_.seed;
  r->iterations_used = params_.iterations;
  r->variant = variant_;
  return r;
}

std::optional<PlanResult> plan(const Scenario& scenario,
                               const PlannerParams& params, Variant variant) {
  Planner planner(scenario, params, variant);
  planner.run();
  return planner.result();
}

void write_trace_csv(const std::vector<TraceRecord>& trace,
                     std::ostream& out) {
  out << "iteration,tree_size (nodes),best_cost (cost units; inf when no"
         " solution yet)\n";
  const auto flags = out.flags();
  out.precision(17);
  for (const TraceRecord& r : trace) {
    out << r.iteration << ',' << r.tree_size << ',';
    if (std::isinf(r.best_cost)) {
      out << "inf";
    } else {
      out << r.best_cost;
    }
    out << '\n';
  }
  out.flags(flags);
}

}  // namespace socialnav
