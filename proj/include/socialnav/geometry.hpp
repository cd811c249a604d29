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

#ifndef SOCIALNAV_GEOMETRY_HPP_
#define SOCIALNAV_GEOMETRY_HPP_

#include <algorithm>
#include <cmath>

namespace socialnav {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_in, double y_in) : x(x_in), y(y_in) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// Axis-aligned rectangle, lo <= hi componentwise.
struct Rect {
  Vec2 lo;
  Vec2 hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  bool contains(const Vec2& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  Vec2 clamp(const Vec2& p) const {
    return {std::clamp(p.x, lo.x, hi.x), std::clamp(p.y, lo.y, hi.y)};
  }
};

struct Disc {
  Vec2 center;
  double radius = 0.0;
};

/// Distance from point p to the segment [a, b]. Degenerate segments are
/// treated as points.
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

/// True iff segments [a1,a2] and [b1,b2] intersect (touching counts).
bool segments_intersect(const Vec2& a1, const Vec2& a2, const Vec2& b1,
                        const Vec2& b2);

/// Minimum distance between two segments; 0 when they intersect.
double segment_segment_distance(const Vec2& a1, const Vec2& a2, const Vec2& b1,
                                const Vec2& b2);

/// Minimum distance from segment [a,b] to the (solid) rectangle; 0 when the
/// segment touches or enters it.
double segment_rect_distance(const Vec2& a, const Vec2& b, const Rect& rect);

bool disc_intersects_rect(const Disc& d, const Rect& rect);
bool disc_intersects_disc(const Disc& a, const Disc& b);

/// Segment inflated by `inflation` against a solid rectangle.
bool segment_intersects_rect(const Vec2& a, const Vec2& b, const Rect& rect,
                             double inflation = 0.0);

/// Segment inflated by `inflation` against a disc.
bool segment_intersects_disc(const Vec2& a, const Vec2& b, const Disc& d,
                             double inflation = 0.0);

}  // namespace socialnav

#endif  // SOCIALNAV_GEOMETRY_HPP_
