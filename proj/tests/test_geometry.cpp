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

#include "socialnav/geometry.hpp"

#include <doctest.h>

#include "socialnav/rng.hpp"

namespace socialnav {
namespace {

TEST_CASE("vec2 arithmetic and norms") {
  const Vec2 a{3.0, 4.0};
  CHECK(a.norm() == doctest::Approx(5.0));
  CHECK(a.squared_norm() == doctest::Approx(25.0));
  const Vec2 b = a + Vec2{1.0, -1.0};
  CHECK(b.x == doctest::Approx(4.0));
  CHECK(b.y == doctest::Approx(3.0));
  CHECK(distance(a, a) == 0.0);
  CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
}

TEST_CASE("rect contains, clamp, and extents") {
  const Rect r{{1.0, 2.0}, {4.0, 8.0}};
  CHECK(r.width() == doctest::Approx(3.0));
  CHECK(r.height() == doctest::Approx(6.0));
  CHECK(r.contains({1.0, 2.0}));
  CHECK(r.contains({4.0, 8.0}));
  CHECK(r.contains({2.5, 5.0}));
  CHECK_FALSE(r.contains({0.99, 5.0}));
  CHECK_FALSE(r.contains({2.0, 8.01}));
  const Vec2 c = r.clamp({10.0, -10.0});
  CHECK(c.x == doctest::Approx(4.0));
  CHECK(c.y == doctest::Approx(2.0));
}

TEST_CASE("point to segment distance") {
  const Vec2 a{0.0, 0.0};
  const Vec2 b{4.0, 0.0};
  CHECK(point_segment_distance({2.0, 3.0}, a, b) == doctest::Approx(3.0));
  CHECK(point_segment_distance({-3.0, 4.0}, a, b) == doctest::Approx(5.0));
  CHECK(point_segment_distance({7.0, 4.0}, a, b) == doctest::Approx(5.0));
  CHECK(point_segment_distance({2.0, 0.0}, a, b) == 0.0);
  // Degenerate segment collapses to a point.
  CHECK(point_segment_distance({3.0, 4.0}, a, a) == doctest::Approx(5.0));
}

TEST_CASE("point to segment distance is endpoint-symmetric") {
  RngStream rng(11);
  for (int i = 0; i < 500; ++i) {
    const Vec2 p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vec2 a{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vec2 b{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const double d1 = point_segment_distance(p, a, b);
    const double d2 = point_segment_distance(p, b, a);
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));
    CHECK(d1 <= distance(p, a) + 1e-12);
    CHECK(d1 <= distance(p, b) + 1e-12);
  }
}

TEST_CASE("segment intersection cases") {
  CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  // Shared endpoint counts as an intersection.
  CHECK(segments_intersect({0, 0}, {1, 0}, {1, 0}, {2, 1}));
  // Collinear overlap.
  CHECK(segments_intersect({0, 0}, {3, 0}, {1, 0}, {2, 0}));
  // Collinear but disjoint.
  CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
}

TEST_CASE("segment to segment distance") {
  CHECK(segment_segment_distance({0, 0}, {2, 2}, {0, 2}, {2, 0}) == 0.0);
  CHECK(segment_segment_distance({0, 0}, {1, 0}, {0, 2}, {1, 2}) ==
        doctest::Approx(2.0));
  CHECK(segment_segment_distance({0, 0}, {1, 0}, {3, 0}, {4, 0}) ==
        doctest::Approx(2.0));
  CHECK(segment_segment_distance({0, 0}, {1, 0}, {2, 1}, {2, -1}) ==
        doctest::Approx(1.0));
}

TEST_CASE("segment to rect distance") {
  const Rect r{{2.0, 2.0}, {4.0, 4.0}};
  // Endpoint inside.
  CHECK(segment_rect_distance({3.0, 3.0}, {10.0, 10.0}, r) == 0.0);
  // Crossing through.
  CHECK(segment_rect_distance({0.0, 3.0}, {10.0, 3.0}, r) == 0.0);
  // Fully outside, nearest to the left edge.
  CHECK(segment_rect_distance({0.0, 0.0}, {0.0, 6.0}, r) ==
        doctest::Approx(2.0));
  // Nearest to a corner.
  CHECK(segment_rect_distance({5.0, 5.0}, {6.0, 6.0}, r) ==
        doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("disc intersection predicates are tangency-inclusive") {
  const Rect r{{0.0, 0.0}, {2.0, 2.0}};
  CHECK(disc_intersects_rect({{3.0, 1.0}, 1.0}, r));
  CHECK_FALSE(disc_intersects_rect({{3.1, 1.0}, 1.0}, r));
  CHECK(disc_intersects_rect({{1.0, 1.0}, 0.1}, r));
  CHECK(disc_intersects_disc({{0, 0}, 1.0}, {{2, 0}, 1.0}));
  CHECK_FALSE(disc_intersects_disc({{0, 0}, 1.0}, {{2.01, 0}, 1.0}));
}

TEST_CASE("segment shape predicates honor inflation") {
  const Rect r{{2.0, 2.0}, {4.0, 4.0}};
  const Vec2 a{0.0, 1.5};
  const Vec2 b{6.0, 1.5};
  CHECK_FALSE(segment_intersects_rect(a, b, r, 0.0));
  CHECK(segment_intersects_rect(a, b, r, 0.5));
  const Disc d{{3.0, 0.0}, 1.0};
  CHECK_FALSE(segment_intersects_disc(a, b, d, 0.0));
  CHECK(segment_intersects_disc(a, b, d, 0.6));
}

}  // namespace
}  // namespace socialnav
