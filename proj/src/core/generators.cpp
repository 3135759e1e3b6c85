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

#include <cmath>
#include <numbers>
#include <random>

#include "segvis/error.hpp"
#include "segvis/geometry.hpp"

namespace segvis {

namespace {

constexpr double kCircleRadius = 10'000'000.0;
constexpr int kRandomAttemptsPerPoint = 10'000;

}  // namespace

PointSet gen_convex(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "gen_convex needs n >= 3");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  // Clockwise from the top, so that hull position k is point k.
  for (int k = 0; k < n; ++k) {
    const double theta = std::numbers::pi / 2 - 2 * std::numbers::pi * k / n;
    pts.push_back({std::llround(kCircleRadius * std::cos(theta)),
                   std::llround(kCircleRadius * std::sin(theta))});
  }
  if (!is_general_position(pts))
    throw Error(ErrorCode::kConstruction, "gen_convex produced a collinear triple");
  PointSet out(std::move(pts));
  const HullData h = convex_hull(out);
  if (h.m() != n) throw Error(ErrorCode::kConstruction, "gen_convex lost convex position");
  for (int k = 0; k < n; ++k)
    if (h.hull[static_cast<std::size_t>(k)] != k)
      throw Error(ErrorCode::kConstruction, "gen_convex hull order mismatch");
  return out;
}

bool is_double_chain(std::span<const Point> points, int p) {
  const int n = static_cast<int>(points.size());
  if (p < 0 || p > n) return false;
  auto chain_side_ok = [&](int lo, int hi, int olo, int ohi, Orientation above) {
    for (int a = olo; a < ohi; ++a)
      for (int b = lo; b < hi; ++b)
        for (int c = b + 1; c < hi; ++c) {
          const Point& left = points[b].x < points[c].x ? points[b] : points[c];
          const Point& right = points[b].x < points[c].x ? points[c] : points[b];
          if (left.x == right.x) return false;
          if (orientation(left, right, points[a]) != above) return false;
        }
    return true;
  };
  auto convex_chain = [&](int lo, int hi) {
    const int k = hi - lo;
    if (k < 3) return true;
    std::vector<Point> sub(points.begin() + lo, points.begin() + hi);
    if (!is_general_position(sub)) return false;
    return convex_hull(PointSet(sub)).m() == k;
  };
  return chain_side_ok(p, n, 0, p, Orientation::kCounterClockwise) &&
         chain_side_ok(0, p, p, n, Orientation::kClockwise) && convex_chain(0, p) &&
         convex_chain(p, n);
}

PointSet gen_double_chain(int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::kInvalidArgument, "double chain needs p, q >= 1");
  // Upper chain on y = H + x^2, lower chain on y = -H - x^2, |x| <= W. A line
  // through two lower points stays below -H + 3W^2 on |x| <= W, so H > 1.5 W^2
  // separates the chains.
  const std::int64_t w = std::max(p, q);
  const std::int64_t h = 2 * w * w + 1;
  std::vector<Point> pts;
  for (int k = 0; k < p; ++k) {
    const std::int64_t x = 2 * k - (p - 1);
    pts.push_back({x, h + x * x});
  }
  for (int k = 0; k < q; ++k) {
    const std::int64_t x = 2 * k - (q - 1);
    pts.push_back({x, -h - x * x});
  }
  if (!is_general_position(pts) || !is_double_chain(pts, p))
    throw Error(ErrorCode::kConstruction, "gen_double_chain violated the separation property");
  return PointSet(std::move(pts));
}

PointSet cacerola_points() {
  return PointSet({{121, 204}, {175, 196}, {216, 82}, {189, 51}, {44, 96}, {36, 140}, {127, 135}});
}

PointSet gen_random_general_position(int n, std::uint64_t seed, std::int64_t bound) {
  if (n < 3 || bound < n)
    throw Error(ErrorCode::kInvalidArgument, "random generator needs n >= 3 and bound >= n");
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the sequence identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(bound) + 1;
  std::vector<Point> pts;
  long attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > static_cast<long>(kRandomAttemptsPerPoint) * n)
      throw Error(ErrorCode::kConstruction, "random generator exhausted its retry budget");
    const Point c{static_cast<std::int64_t>(rng() % span), static_cast<std::int64_t>(rng() % span)};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i] == c) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
        if (orientation(pts[i], pts[j], c) == Orientation::kCollinear) ok = false;
    }
    if (ok) pts.push_back(c);
  }
  return PointSet(std::move(pts));
}

}  // namespace segvis
