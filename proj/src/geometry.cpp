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

namespace socialnav {

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squared_norm();
  if (len2 == 0.0) {
    return distance(p, a);
  }
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

namespace {

// Sign of the cross product (b-a) x (c-a); 0 for collinear triples.
int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const Vec2& a1, const Vec2& a2, const Vec2& b1,
                        const Vec2& b2) {
  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a1, a2, b1)) return true;
  if (o2 == 0 && on_segment(a1, a2, b2)) return true;
  if (o3 == 0 && on_segment(b1, b2, a1)) return true;
  if (o4 == 0 && on_segment(b1, b2, a2)) return true;
  return false;
}

double segment_segment_distance(const Vec2& a1, const Vec2& a2, const Vec2& b1,
                                const Vec2& b2) {
  if (segments_intersect(a1, a2, b1, b2)) return 0.0;
  return std::min(std::min(point_segment_distance(a1, b1, b2),
                           point_segment_distance(a2, b1, b2)),
                  std::min(point_segment_distance(b1, a1, a2),
                           point_segment_distance(b2, a1, a2)));
}

double segment_rect_distance(const Vec2& a, const Vec2& b, const Rect& rect) {
  if (rect.contains(a) || rect.contains(b)) return 0.0;
  const Vec2 c0 = rect.lo;
  const Vec2 c1{rect.hi.x, rect.lo.y};
  const Vec2 c2 = rect.hi;
  const Vec2 c3{rect.lo.x, rect.hi.y};
  double d = segment_segment_distance(a, b, c0, c1);
  d = std::min(d, segment_segment_distance(a, b, c1, c2));
  d = std::min(d, segment_segment_distance(a, b, c2, c3));
  return std::min(d, segment_segment_distance(a, b, c3, c0));
}

bool disc_intersects_rect(const Disc& d, const Rect& rect) {
  return distance(rect.clamp(d.center), d.center) <= d.radius;
}

bool disc_intersects_disc(const Disc& a, const Disc& b) {
  return distance(a.center, b.center) <= a.radius + b.radius;
}

bool segment_intersects_rect(const Vec2& a, const Vec2& b, const Rect& rect,
                             double inflation) {
  return segment_rect_distance(a, b, rect) <= inflation;
}

bool segment_intersects_disc(const Vec2& a, const Vec2& b, const Disc& d,
                             double inflation) {
  return point_segment_distance(d.center, a, b) <= d.radius + inflation;
}

}  // namespace socialnav
