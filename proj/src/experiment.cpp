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

#include "socialnav/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "socialnav/social.hpp"

namespace socialnav {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

void update_clearances(Clearances& c, const BodyPoints& pts,
                       const SocialField& field) {
  for (const Person& person : field.persons) {
    const Vec2 center{person.x, person.y};
    c.base = std::min(c.base, distance(pts.base, center));
    c.link1_tip = std::min(c.link1_tip, distance(pts.link1_tip, center));
    c.link2_tip = std::min(c.link2_tip, distance(pts.link2_tip, center));
    for (const Vec2& v : pts.object) {
      c.object = std::min(c.object, distance(v, center));
    }
  }
}

}  // namespace

double rescore_social(const Scenario& scenario, const PlanResult& result) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < result.waypoints.size(); ++i) {
    total += motion_social_cost(
        scenario.field, result.waypoints[i], result.waypoints[i + 1],
        scenario.interest_points, scenario.robot, scenario.object,
        scenario.planner.resolution, scenario.planner.angular_weight);
  }
  return total;
}

Clearances path_clearances(const Scenario& scenario,
                           const PlanResult& result) {
  Clearances c{kInf, kInf, kInf, kInf};
  BodyPoints pts;
  for (std::size_t i = 0; i + 1 < result.waypoints.size(); ++i) {
    const Configuration& a = result.waypoints[i];
    const Configuration& b = result.waypoints[i + 1];
    const double len =
        config_distance(a, b, scenario.planner.angular_weight);
    const int steps = interpolation_steps(len, scenario.planner.resolution);
    for (int k = 0; k < steps; ++k) {
      const Configuration q =
          config_lerp(a, b, static_cast<double>(k) / (steps - 1));
      forward_points_into(q, scenario.robot, scenario.object, pts);
      update_clearances(c, pts, scenario.field);
    }
  }
  if (result.waypoints.size() == 1) {
    forward_points_into(result.waypoints[0], scenario.robot, scenario.object,
                        pts);
    update_clearances(c, pts, scenario.field);
  }
  return c;
}

RunSummary summarize_run(const Scenario& scenario, Variant variant,
                         int run_index, std::uint64_t seed,
                         const PlanResult* result) {
  RunSummary s;
  s.variant = variant;
  s.run_index = run_index;
  s.seed = seed;
  if (!result) {
    s.total_cost = kNan;
    s.social_cost = kNan;
    s.social_cost_full = kNan;
    s.path_length_base = kNan;
    s.clearances = {kNan, kNan, kNan, kNan};
    return s;
  }

  s.success = true;
  s.waypoints = static_cast<int>(result->waypoints.size());
  s.total_cost = result->total_cost;
  s.clearances = path_clearances(scenario, *result);

  s.curve.reserve(result->waypoints.size());
  CurvePoint acc;
  s.curve.push_back(acc);
  for (std::size_t i = 0; i + 1 < result->waypoints.size(); ++i) {
    acc.cumulative_norm += result->per_edge[i].length;
    acc.cumulative_social += result->per_edge[i].social;
    acc.cumulative_social_full += motion_social_cost(
        scenario.field, result->waypoints[i], result->waypoints[i + 1],
        scenario.interest_points, scenario.robot, scenario.object,
        scenario.planner.resolution, scenario.planner.angular_weight);
    s.curve.push_back(acc);
    s.path_length_base += std::hypot(
        result->waypoints[i + 1].x - result->waypoints[i].x,
        result->waypoints[i + 1].y - result->waypoints[i].y);
  }
  s.social_cost = acc.cumulative_social;
  s.social_cost_full = acc.cumulative_social_full;
  return s;
}

std::vector<RunSummary> run_batch(const Scenario& scenario,
                                  const std::vector<Variant>& variants,
                                  std::uint64_t base_seed, int runs,
                                  int jobs) {
  const std::size_t total = variants.size() * static_cast<std::size_t>(runs);
  std::vector<RunSummary> out(total);
  if (total == 0) return out;

  const auto do_run = [&](std::size_t index) {
    const std::size_t v = index / static_cast<std::size_t>(runs);
    const int run = static_cast<int>(index % static_cast<std::size_t>(runs));
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(run);
    PlannerParams params = scenario.planner;
    params.seed = seed;
    try {
      const auto result = plan(scenario, params, variants[v]);
      out[index] = summarize_run(scenario, variants[v], run, seed,
                                 result ? &*result : nullptr);
    } catch (const std::exception&) {
      // A single failed run must not abort the batch.
      out[index] = summarize_run(scenario, variants[v], run, seed, nullptr);
    }
  };

  int workers = jobs <= 0
                    ? static_cast<int>(std::thread::hardware_concurrency())
                    : jobs;
  workers = std::clamp(workers, 1, static_cast<int>(total));
  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) do_run(i);
    return out;
  }

  // Runs are independent and write disjoint slots, so the merge order (and
  // therefore the output) does not depend on scheduling.
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < total;
         i = next.fetch_add(1)) {
      do_run(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return out;
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 0) return kNan;
  if (n == 1) return sorted[0];
  const double rank = p * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(rank);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

namespace {

void write_value(std::ostream& out, double v) {
  if (std::isnan(v)) return;  // empty cell for failed runs
  if (std::isinf(v)) {
    out << (v > 0 ? "inf" : "-inf");
    return;
  }
  out << v;
}

std::string run_file_name(const RunSummary& s) {
  std::ostringstream name;
  name << "curve_" << variant_name(s.variant) << '_';
  name.width(3);
  name.fill('0');
  name << s.run_index;
  name << ".csv";
  return name.str();
}

void write_boxplot_rows(std::ostream& out, const std::string& variant,
                        const std::string& metric,
                        std::vector<double> values) {
  out << variant << ',' << metric << ',' << values.size();
  if (values.empty()) {
    out << ",,,,,\n";  // marked empty: no statistics from zero runs
    return;
  }
  std::sort(values.begin(), values.end());
  for (const double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    out << ',';
    write_value(out, quantile_sorted(values, p));
  }
  out << '\n';
}

}  // namespace

void emit_metrics(const std::vector<RunSummary>& summaries,
                  const std::string& out_dir) {
  namespace fs = std::filesystem;
  const fs::path root(out_dir);
  fs::create_directories(root / "curves");

  {
    std::ofstream out(root / "run_index.csv");
    out.precision(17);
    out << "variant,run_index,seed,success,waypoints,"
           "total_cost (cost units),social_cost (cost units),"
           "social_cost_full (cost units),path_length_base (m),"
           "clearance_base (m),clearance_link1_tip (m),"
           "clearance_link2_tip (m),clearance_object (m)\n";
    for (const RunSummary& s : summaries) {
      out << variant_name(s.variant) << ',' << s.run_index << ',' << s.seed
          << ',' << (s.success ? 1 : 0) << ',' << s.waypoints << ',';
      write_value(out, s.total_cost);
      out << ',';
      write_value(out, s.social_cost);
      out << ',';
      write_value(out, s.social_cost_full);
      out << ',';
      write_value(out, s.path_length_base);
      for (const double c : {s.clearances.base, s.clearances.link1_tip,
                             s.clearances.link2_tip, s.clearances.object}) {
        out << ',';
        write_value(out, c);
      }
      out << '\n';
    }
  }

  {
    // One statistics row per (variant, metric) over that variant's
    // successful runs, in first-appearance order of the variants.
    std::ofstream out(root / "boxplot_summary.csv");
    out.precision(17);
    out << "variant,metric,count,min,q1,median,q3,max"
           " (quartile rule: linear interpolation between order"
           " statistics)\n";
    std::vector<Variant> order;
    for (const RunSummary& s : summaries) {
      if (std::find(order.begin(), order.end(), s.variant) == order.end()) {
        order.push_back(s.variant);
      }
    }
    for (const Variant v : order) {
      std::vector<double> total, full, length;
      for (const RunSummary& s : summaries) {
        if (s.variant != v || !s.success) continue;
        total.push_back(s.total_cost);
        full.push_back(s.social_cost_full);
        length.push_back(s.path_length_base);
      }
      const std::string name = variant_name(v);
      write_boxplot_rows(out, name, "total_cost", total);
      write_boxplot_rows(out, name, "social_cost_full", full);
      write_boxplot_rows(out, name, "path_length_base", length);
    }
  }

  for (const RunSummary& s : summaries) {
    if (!s.success) continue;
    std::ofstream out(root / "curves" / run_file_name(s));
    out.precision(17);
    out << "cumulative_norm (config-space units),"
           "cumulative_social_cost (cost units),"
           "cumulative_social_cost_full (cost units)\n";
    for (const CurvePoint& p : s.curve) {
      out << p.cumulative_norm << ',' << p.cumulative_social << ','
          << p.cumulative_social_full << '\n';
    }
  }
}

}  // namespace socialnav
