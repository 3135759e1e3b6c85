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

#include "segvis/geometry.hpp"

#include <algorithm>
#include <set>

#include "segvis/error.hpp"

namespace segvis {

__int128 cross(const Point& p, const Point& q, const Point& r) {
  const __int128 ux = q.x - p.x;
  const __int128 uy = q.y - p.y;
  const __int128 vx = r.x - p.x;
  const __int128 vy = r.y - p.y;
  return ux * vy - uy * vx;
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const __int128 c = cross(p, q, r);
  if (c > 0) return Orientation::kCounterClockwise;
  if (c < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

__int128 squared_distance(const Point& p, const Point& q) {
  const __int128 dx = q.x - p.x;
  const __int128 dy = q.y - p.y;
  return dx * dx + dy * dy;
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::kClockwise: return "Clockwise";
    case Orientation::kCounterClockwise: return "CounterClockwise";
    case Orientation::kCollinear: return "Collinear";
  }
  return "?";
}

std::string to_string(const SegmentId& s) {
  return std::to_string(s.i) + "-" + std::to_string(s.j);
}

std::optional<std::array<PointIndex, 3>> find_collinear_triple(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(points[i], points[j], points[k]) == Orientation::kCollinear)
          return std::array<PointIndex, 3>{i, j, k};
  return std::nullopt;
}

bool is_general_position(std::span<const Point> points) {
  return !find_collinear_triple(points).has_value();
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
        p.y < -kMaxCoordinate) {
      throw Error(ErrorCode::kOutOfRange, "point " + std::to_string(i) +
                                              " exceeds the coordinate bound 2^30");
    }
  }
  std::set<Point> seen;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!seen.insert(points_[i]).second)
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate point (" + std::to_string(points_[i].x) + "," +
                      std::to_string(points_[i].y) + ") at index " + std::to_string(i));
  }
  if (auto t = find_collinear_triple(points_)) {
    auto fmt = [this](int k) {
      return "p" + std::to_string(k) + "=(" + std::to_string(points_[k].x) + "," +
             std::to_string(points_[k].y) + ")";
    };
    throw Error(ErrorCode::kNotGeneralPosition, "collinear triple: " + fmt((*t)[0]) + ", " +
                                                    fmt((*t)[1]) + ", " + fmt((*t)[2]));
  }
}

namespace {

bool proper_crossing(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orientation(a, b, c) != orientation(a, b, d) &&
         orientation(c, d, a) != orientation(c, d, b);
}

}  // namespace

bool segments_intersect(const PointSet& points, const SegmentId& a, const SegmentId& b) {
  if (a.shares_endpoint(b)) return true;
  return proper_crossing(points[a.i], points[a.j], points[b.i], points[b.j]);
}

bool crosses(const PointSet& points, const SegmentId& a, const SegmentId& b) {
  if (a.shares_endpoint(b)) return false;
  return proper_crossing(points[a.i], points[a.j], points[b.i], points[b.j]);
}

bool is_clean(const PointSet& points, const SegmentId& a) {
  const int n = points.size();
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      if (crosses(points, a, SegmentId(k, l))) return false;
  return true;
}

bool in_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const Orientation o = orientation(a, b, c);
  return o != Orientation::kCollinear && orientation(a, b, p) == o &&
         orientation(b, c, p) == o && orientation(c, a, p) == o;
}

bool in_convex_polygon(std::span<const Point> polygon, const Point& p) {
  const std::size_t k = polygon.size();
  if (k < 3) return false;
  const Orientation o = orientation(polygon[0], polygon[1], polygon[2]);
  for (std::size_t i = 0; i < k; ++i)
    if (orientation(polygon[i], polygon[(i + 1) % k], p) != o) return false;
  return true;
}

bool in_convex_position(const Point& a, const Point& b, const Point& c, const Point& d) {
  return !in_triangle(b, c, d, a) && !in_triangle(a, c, d, b) && !in_triangle(a, b, d, c) &&
         !in_triangle(a, b, c, d);
}

bool same_side(const Point& a, const Point& b, const Point& p, const Point& q) {
  const Orientation op = orientation(a, b, p);
  return op != Orientation::kCollinear && op == orientation(a, b, q);
}

int compare_line_distance(const Point& a, const Point& b, const Point& p, const Point& q) {
  __int128 dp = cross(a, b, p);
  __int128 dq = cross(a, b, q);
  if (dp < 0) dp = -dp;
  if (dq < 0) dq = -dq;
  return dp < dq ? -1 : (dp > dq ? 1 : 0);
}

bool HullData::on_hull(PointIndex p) const {
  return std::find(hull.begin(), hull.end(), p) != hull.end();
}

HullData convex_hull(const PointSet& points) {
  const int n = points.size();
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "convex hull needs at least 3 points");
  std::vector<PointIndex> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return points[a] < points[b]; });

  // Monotone chain, counter-clockwise; no collinear points by precondition.
  std::vector<PointIndex> h(static_cast<std::size_t>(2 * n));
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && orientation(points[h[k - 2]], points[h[k - 1]], points[i]) !=
                         Orientation::kCounterClockwise)
      --k;
    h[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    const int i = idx[t];
    while (k >= lower && orientation(points[h[k - 2]], points[h[k - 1]], points[i]) !=
                             Orientation::kCounterClockwise)
      --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  std::reverse(h.begin(), h.end());
  auto start = std::min_element(h.begin(), h.end());
  std::rotate(h.begin(), start, h.end());

  HullData out;
  out.hull = std::move(h);
  std::vector<bool> mark(static_cast<std::size_t>(n), false);
  for (int v : out.hull) mark[static_cast<std::size_t>(v)] = true;
  for (int i = 0; i < n; ++i)
    if (!mark[static_cast<std::size_t>(i)]) out.interior.push_back(i);
  return out;
}

std::vector<PointIndex> order_by_line_rotation(const PointSet& points, PointIndex pivot,
                                               PointIndex start, Orientation sense,
                                               std::span<const PointIndex> candidates) {
  const Point& c = points[pivot];
  const Point d{points[start].x - c.x, points[start].y - c.y};
  const Point origin{0, 0};
  const int s = static_cast<int>(sense);
  // Fold every direction into the open half-plane swept first by the rotating
  // ray; the line meets p (or its antipode) at that folded angle.
  auto folded = [&](PointIndex p) {
    Point w{points[p].x - c.x, points[p].y - c.y};
    const __int128 side = cross(origin, d, w);
    if (side == 0) throw Error(ErrorCode::kNotGeneralPosition, "angular tie in rotation");
    if ((side > 0 ? 1 : -1) != s) w = Point{-w.x, -w.y};
    return w;
  };
  std::vector<PointIndex> out(candidates.begin(), candidates.end());
  std::sort(out.begin(), out.end(), [&](PointIndex a, PointIndex b) {
    const __int128 t = cross(origin, folded(a), folded(b));
    return s > 0 ? t > 0 : t < 0;
  });
  return out;
}

RotationNeighbors rotation_neighbors(const PointSet& points, const HullData& hull, int i) {
  if (points.size() < 5)
    throw Error(ErrorCode::kInvalidArgument, "rotation neighbours need n >= 5");
  const PointIndex vi = hull.at(i);
  const PointIndex next = hull.at(i + 1);
  const PointIndex prev = hull.at(i - 1);
  std::vector<PointIndex> cand;
  for (int p = 0; p < points.size(); ++p)
    if (p != vi && p != next && p != prev) cand.push_back(p);
  auto order = order_by_line_rotation(points, vi, next, Orientation::kClockwise, cand);
  return {order.front(), order.back()};
}

}  // namespace segvis
