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

#ifndef SOCIALNAV_PLANNER_HPP_
#define SOCIALNAV_PLANNER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "socialnav/model.hpp"
#include "socialnav/rng.hpp"
#include "socialnav/social.hpp"
#include "socialnav/world.hpp"

namespace socialnav {

struct Scenario;

enum class Variant {
  kRrtStar,         // zero social weights, pure length cost
  kSocial,          // full multi-point social cost
  kSocialInformed,  // social + ellipse sampling after the first solution
  kSocialBaseOnly,  // weight 1 on the base point, 0 elsewhere
};

std::string variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string& name);

struct PlannerParams {
  int iterations = 2000;
  double steer_range = 1.0;      // max extension, config-space units
  double near_radius = 1.5;      // neighbor radius, config-space units
  double resolution = 0.05;      // interpolation step for cost and collision
  double length_weight = 0.001;  // tie-break weight on edge length
  std::uint64_t seed = 0;
  double goal_radius = 1.5;      // base-position goal tolerance, meters
  double angular_weight = 1.0;   // metric weight on joint differences
};

struct TreeNode {
  Configuration config;
  int parent = -1;  // -1 for the root
  double edge_social = 0.0;  // motion social cost of the parent edge
  double edge_length = 0.0;  // config-space length of the parent edge
  double cost = 0.0;         // cost from root, social + length_weight * length
  std::vector<int> children;
};

struct EdgeRecord {
  double social = 0.0;
  double length = 0.0;
};

struct PlanResult {
  std::vector<Configuration> waypoints;  // root first
  std::vector<EdgeRecord> per_edge;      // per_edge[i]: waypoints[i] -> [i+1]
  double total_cost = 0.0;
  std::uint64_t seed = 0;
  int iterations_used = 0;
  Variant variant = Variant::kSocial;
};

struct TraceRecord {
  int iteration = 0;
  std::size_t tree_size = 0;
  // Best cost over nodes within goal_radius of the goal; +inf when none.
  double best_cost = 0.0;
};

Configuration sample_random_state(const Rect& bounds, RngStream& rng);

/// Uniform sample over the XY ellipse with the given foci and focal-sum bound
/// (intersected with the map bounds); joints uniform over [0, 2*pi).
/// Empty when c_best_len is below the focal distance.
std::optional<Configuration> sample_informed(const Rect& bounds,
                                             RngStream& rng,
                                             const Vec2& start_base,
                                             const Vec2& goal_base,
                                             double c_best_len);

/// Index of the node closest to q; ties go to the earliest insertion.
int nearest_node(const std::vector<TreeNode>& nodes, const Configuration& q,
                 double angular_weight = 1.0);

/// Indices of all nodes within near_radius of q, in insertion order.
std::vector<int> all_near(const std::vector<TreeNode>& nodes,
                          const Configuration& q, double near_radius,
                          double angular_weight = 1.0);

/// q_to when it lies within range; otherwise the configuration at distance
/// range from q_from along the straight wrapped path toward q_to.
Configuration steer(const Configuration& q_from, const Configuration& q_to,
                    double range, double angular_weight = 1.0);

/// Edge cost: motion social cost plus length_weight times the edge length.
double edge_cost(const Configuration& qa, const Configuration& qb,
                 const SocialField& field, const InterestPointSet& pts,
                 const RobotGeometry& robot, const ObjectGeometry& obj,
                 const PlannerParams& params);

/// Lowest-cost path to any node whose base lies within goal_radius of
/// goal_base; empty when no node qualifies. Metadata fields (seed, variant,
/// iterations) are left at defaults.
std::optional<PlanResult> get_path(const std::vector<TreeNode>& nodes,
                                   const Vec2& goal_base, double goal_radius);

/// Sampling-tree planner over the 4-D configuration space with social edge
/// costs, choose-parent and rewire. One instance owns one run; not
/// thread-safe, but independent instances may run concurrently.
class Planner {
 public:
  Planner(const Scenario& scenario, const PlannerParams& params,
          Variant variant);

  /// Runs all K iterations. Call once.
  void run();

  /// Path extraction after run(); metadata filled in.
  std::optional<PlanResult> result() const;

  const std::vector<TreeNode>& nodes() const { return nodes_; }

  void set_trace_enabled(bool on) { trace_enabled_ = on; }
  const std::vector<TraceRecord>& trace() const { return trace_; }

  /// Cost of a node recomputed as the sum of stored edge costs from the
  /// root; test support for the cost-consistency invariant.
  double recompute_cost_from_root(int node_index) const;

  const InterestPointSet& effective_points() const { return points_; }
  double length_weight() const { return params_.length_weight; }

 private:
  void iterate(int iteration);
  int best_goal_node() const;
  double base_path_length(int node_index) const;
  void reparent(int child, int new_parent, double edge_social,
                double edge_length);
  void refresh_subtree_costs(int node_index);

  const Scenario& scenario_;
  PlannerParams params_;
  Variant variant_;
  InterestPointSet points_;  // variant-adjusted weights
  bool informed_ = false;
  RngStream rng_;
  std::vector<TreeNode> nodes_;
  bool trace_enabled_ = false;
  std::vector<TraceRecord> trace_;
  double focal_distance_ = 0.0;
};

/// Full planning run per the given variant. Empty on failure (no tree node
/// reaches the goal region within K iterations).
std::optional<PlanResult> plan(const Scenario& scenario,
                               const PlannerParams& params, Variant variant);

void write_trace_csv(const std::vector<TraceRecord>& trace, std::ostream& out);

}  // namespace socialnav

#endif  // SOCIALNAV_PLANNER_HPP_
