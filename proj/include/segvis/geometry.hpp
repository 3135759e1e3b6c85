// Copyright 2026 The segvis Authors.
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

// Exact planar primitives over integer points.
//
// Every predicate reduces to the sign of a 2x2 determinant of coordinate
// differences, evaluated in 128-bit integers. Coordinates are bounded by
// kMaxCoordinate so that no intermediate value can overflow.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace segvis {

inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { kClockwise = -1, kCollinear = 0, kCounterClockwise = 1 };

Orientation orientation(const Point& p, const Point& q, const Point& r);

// Signed doubled area of (p, q, r); positive for counter-clockwise turns.
__int128 cross(const Point& p, const Point& q, const Point& r);

__int128 squared_distance(const Point& p, const Point& q);

inline Orientation reverse(Orientation o) {
  return static_cast<Orientation>(-static_cast<int>(o));
}

std::string to_string(Orientation o);

using PointIndex = int;

// Unordered pair of point indices stored with i < j.
struct SegmentId {
  PointIndex i = 0;
  PointIndex j = 0;

  SegmentId() = default;
  SegmentId(PointIndex a, PointIndex b) : i(a < b ? a : b), j(a < b ? b : a) {}

  bool has_endpoint(PointIndex p) const { return i == p || j == p; }
  bool shares_endpoint(const SegmentId& o) const {
    return has_endpoint(o.i) || has_endpoint(o.j);
  }

  friend bool operator==(const SegmentId&, const SegmentId&) = default;
  friend auto operator<=>(const SegmentId&, const SegmentId&) = default;
};

std::string to_string(const SegmentId& s);

// Returns the first collinear triple (i < j < k) found, if any.
std::optional<std::array<PointIndex, 3>> find_collinear_triple(std::span<const Point> points);

bool is_general_position(std::span<const Point> points);

// Immutable point configuration: pairwise distinct, no three collinear and
// all coordinates within +-kMaxCoordinate. Construction throws segvis::Error
// (kOutOfRange / kInvalidArgument / kNotGeneralPosition) otherwise.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](PointIndex i) const { return points_[static_cast<std::size_t>(i)]; }
  std::span<const Point> points() const { return points_; }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

 private:
  std::vector<Point> points_;
};

// Closed segments a and b share at least one point. Requires a != b and
// general position.
bool segments_intersect(const PointSet& points, const SegmentId& a, const SegmentId& b);

// a and b meet at a point interior to both.
bool crosses(const PointSet& points, const SegmentId& a, const SegmentId& b);

// No other segment of the complete drawing crosses a.
bool is_clean(const PointSet& points, const SegmentId& a);

// Strictly inside triangle (a, b, c); orientation agnostic.
bool in_triangle(const Point& a, const Point& b, const Point& c, const Point& p);

// Strictly inside the convex polygon given in either cyclic orientation.
bool in_convex_polygon(std::span<const Point> polygon, const Point& p);

// The four points are in convex position (no one inside the triangle of the
// other three).
bool in_convex_position(const Point& a, const Point& b, const Point& c, const Point& d);

// p and q lie strictly on the same side of the line through a and b.
bool same_side(const Point& a, const Point& b, const Point& p, const Point& q);

// Compares distances of p and q to the line through a and b. Negative when p
// is closer, zero on ties.
int compare_line_distance(const Point& a, const Point& b, const Point& p, const Point& q);

struct HullData {
  // Clockwise cyclic order, starting at the lowest point index on the hull.
  std::vector<PointIndex> hull;
  // Remaining indices, ascending.
  std::vector<PointIndex> interior;

  int m() const { return static_cast<int>(hull.size()); }
  // Hull vertex at cyclic position i (any integer).
  PointIndex at(int i) const {
    const int mm = m();
    return hull[static_cast<std::size_t>(((i % mm) + mm) % mm)];
  }
  bool on_hull(PointIndex p) const;
};

HullData convex_hull(const PointSet& points);

// Among `candidates`, orders points by the angle at which a line through
// `pivot`, starting along pivot->start and rotating in `sense`, first meets
// them. General position forbids ties.
std::vector<PointIndex> order_by_line_rotation(const PointSet& points, PointIndex pivot,
                                               PointIndex start, Orientation sense,
                                               std::span<const PointIndex> candidates);

struct RotationNeighbors {
  PointIndex first;  // v_i^-
  PointIndex last;   // v_i^+
};

// First and last point of P \ {v_i, v_{i+1}, v_{i-1}} met when the line
// through v_i and v_{i+1} is rotated clockwise around v_i. Requires n >= 5.
RotationNeighbors rotation_neighbors(const PointSet& points, const HullData& hull, int i);

// Generators. Each verifies its defining property after construction and
// throws segvis::Error(kConstruction) on failure.
PointSet gen_convex(int n);
PointSet gen_double_chain(int p, int q);
PointSet cacerola_points();
PointSet gen_random_general_position(int n, std::uint64_t seed, std::int64_t bound);

// Every point of the first `p` points (upper chain) lies strictly above every
// line through two of the remaining points, and vice versa; each chain is in
// convex position.
bool is_double_chain(std::span<const Point> points, int p);

}  // namespace segvis
