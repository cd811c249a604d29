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

#ifndef SOCIALNAV_RENDER_HPP_
#define SOCIALNAV_RENDER_HPP_

#include <iosfwd>
#include <string>

#include "socialnav/planner.hpp"
#include "socialnav/scenario.hpp"

namespace socialnav {

/// Renders the scenario (bounds, obstacles, persons with their comfort-field
/// threshold contours) and, when given, the planned path with whole-body
/// poses at sampled waypoints. The output depends only on the inputs and is
/// stable across reruns. `path` may be null for a scenario-only view.
std::string render_svg(const Scenario& scenario, const PlanResult* path);

void write_svg(const Scenario& scenario, const PlanResult* path,
               std::ostream& out);

}  // namespace socialnav

#endif  // SOCIALNAV_RENDER_HPP_
