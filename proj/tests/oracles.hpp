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

// Independent reference implementations used by the tests. None of them
// calls into the library code they are compared against.

#pragma once

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <stdexcept>
#include <random>
#include <vector>

#include "segvis/geometry.hpp"
#include "segvis/graph.hpp"
#include "segvis/vertex_set.hpp"

namespace oracle {

using segvis::Point;
using segvis::PointSet;
using segvis::SegmentId;

// Closed-segment intersection by solving p + t r = q + u s exactly with
// rational parameters; shared endpoints count.
inline bool segments_meet(const Point& p0, const Point& p1, const Point& q0, const Point& q1) {
  if (p0 == q0 || p0 == q1 || p1 == q0 || p1 == q1) return true;
  const __int128 rx = p1.x - p0.x, ry = p1.y - p0.y;
  const __int128 sx = q1.x - q0.x, sy = q1.y - q0.y;
  const __int128 den = rx * sy - ry * sx;
  if (den == 0) return false;  // parallel; no collinear triples in general position
  const __int128 qpx = q0.x - p0.x, qpy = q0.y - p0.y;
  __int128 t = qpx * sy - qpy * sx;
  __int128 u = qpx * ry - qpy * rx;
  __int128 d = den;
  if (d < 0) {
    d = -d;
    t = -t;
    u = -u;
  }
  return t >= 0 && t <= d && u >= 0 && u <= d;
}

inline bool meet(const PointSet& p, const SegmentId& a, const SegmentId& b) {
  return segments_meet(p[a.i], p[a.j], p[b.i], p[b.j]);
}

inline bool proper_cross(const PointSet& p, const SegmentId& a, const SegmentId& b) {
  return !a.shares_endpoint(b) && meet(p, a, b);
}

inline std::vector<SegmentId> all_segments(int n) {
  std::vector<SegmentId> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

// Adjacency matrix of D(P) from the parametric predicate.
inline std::vector<std::vector<bool>> adjacency(const PointSet& p) {
  const auto segs = all_segments(p.size());
  const std::size_t v = segs.size();
  std::vector<std::vector<bool>> adj(v, std::vector<bool>(v, false));
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < v; ++b)
      if (a != b) adj[a][b] = !meet(p, segs[a], segs[b]);
  return adj;
}

constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const std::vector<std::vector<bool>>& adj) {
  const std::size_t v = adj.size();
  std::vector<std::vector<int>> d(v, std::vector<int>(v, kInf));
  for (std::size_t a = 0; a < v; ++a) {
    d[a][a] = 0;
    for (std::size_t b = 0; b < v; ++b)
      if (adj[a][b]) d[a][b] = 1;
  }
  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b)
        if (d[a][k] + d[k][b] < d[a][b]) d[a][b] = d[a][k] + d[k][b];
  return d;
}

// Enumerates every shortest a-b path and reports whether one has all its
// internal vertices outside U.
inline bool visible_by_enumeration(const std::vector<std::vector<bool>>& adj,
                                   const std::vector<std::vector<int>>& dist,
                                   const std::vector<bool>& in_u, int a, int b) {
  const int target = dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  if (target >= kInf) return false;
  const int v = static_cast<int>(adj.size());
  std::vector<int> path{a};
  bool found = false;
  std::function<void()> extend = [&]() {
    if (found) return;
    const int cur = path.back();
    const int len = static_cast<int>(path.size()) - 1;
    if (len == target) {
      if (cur != b) return;
      bool clean = true;
      for (std::size_t k = 1; k + 1 < path.size(); ++k)
        clean = clean && !in_u[static_cast<std::size_t>(path[k])];
      found = found || clean;
      return;
    }
    for (int nxt = 0; nxt < v; ++nxt) {
      if (!adj[static_cast<std::size_t>(cur)][static_cast<std::size_t>(nxt)]) continue;
      bool repeat = false;
      for (int p : path) repeat = repeat || p == nxt;
      if (repeat) continue;
      path.push_back(nxt);
      extend();
      path.pop_back();
    }
  };
  extend();
  return found;
}

inline bool is_mv_set_by_enumeration(const std::vector<std::vector<bool>>& adj,
                                     const std::vector<std::vector<int>>& dist,
                                     const std::vector<bool>& in_u) {
  const int v = static_cast<int>(adj.size());
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (in_u[static_cast<std::size_t>(a)] && in_u[static_cast<std::size_t>(b)] &&
          !visible_by_enumeration(adj, dist, in_u, a, b))
        return false;
  return true;
}

// Convex hull size by the definition: p is a hull vertex iff it lies in no
// triangle of three other points.
inline int hull_size_by_triangles(const PointSet& p) {
  auto sgn = [](const Point& a, const Point& b, const Point& c) {
    const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                       static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  const int n = p.size();
  int count = 0;
  for (int x = 0; x < n; ++x) {
    bool inside = false;
    for (int a = 0; a < n && !inside; ++a)
      for (int b = a + 1; b < n && !inside; ++b)
        for (int c = b + 1; c < n && !inside; ++c) {
          if (x == a || x == b || x == c) continue;
          const int s1 = sgn(p[a], p[b], p[x]), s2 = sgn(p[b], p[c], p[x]), s3 = sgn(p[c], p[a], p[x]);
          inside = s1 == s2 && s2 == s3;
        }
    count += inside ? 0 : 1;
  }
  return count;
}

// Random general-position set whose hull has exactly m vertices: m points
// near a circle, then interior points drawn one at a time and kept only when
// strictly inside that polygon and not collinear with two earlier points.
inline PointSet with_hull_size(int m, int interior, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto sgn = [](const Point& a, const Point& b, const Point& c) {
    const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                       static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  auto fits = [&](const std::vector<Point>& pts, const Point& q) {
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (sgn(pts[a], pts[b], q) == 0) return false;
    return true;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    const double r = 10000.0;
    std::uniform_real_distribution<double> jitter(-0.35, 0.35);
    for (int k = 0; k < m; ++k) {
      const double ang = -2 * M_PI * (k + jitter(rng)) / m;  // clockwise
      const Point q{static_cast<std::int64_t>(std::llround(r * std::cos(ang))),
                    static_cast<std::int64_t>(std::llround(r * std::sin(ang)))};
      if (!fits(pts, q)) break;
      pts.push_back(q);
    }
    if (static_cast<int>(pts.size()) != m) continue;
    bool convex = true;
    for (int k = 0; k < m; ++k)
      convex = convex && sgn(pts[k], pts[(k + 1) % m], pts[(k + 2) % m]) < 0;
    if (!convex) continue;
    const std::vector<Point> hull = pts;
    std::uniform_int_distribution<std::int64_t> coord(-10000, 10000);
    for (long tries = 0; static_cast<int>(pts.size()) < m + interior && tries < 100000; ++tries) {
      const Point q{coord(rng), coord(rng)};
      bool in = true;
      for (int k = 0; k < m && in; ++k) in = sgn(hull[k], hull[(k + 1) % m], q) < 0;
      if (in && fits(pts, q)) pts.push_back(q);
    }
    if (static_cast<int>(pts.size()) != m + interior) continue;
    std::shuffle(pts.begin(), pts.end(), rng);
    PointSet ps(pts);
    if (hull_size_by_triangles(ps) == m) return ps;
  }
  throw std::runtime_error("could not sample a set with the requested hull size");
}

}  // namespace oracle
