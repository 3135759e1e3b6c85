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

#include "segvis/graph.hpp"

#include "segvis/error.hpp"

namespace segvis {

DisjointnessGraph::DisjointnessGraph(PointSet points) : points_(std::move(points)) {
  const int n = points_.size();
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "disjointness graph needs n >= 3");
  if (choose2(n) > VertexSet::kCapacity)
    throw Error(ErrorCode::kInvalidArgument,
                "n = " + std::to_string(n) + " exceeds the supported vertex capacity");
  if (auto t = find_collinear_triple(points_.points()))
    throw Error(ErrorCode::kNotGeneralPosition, "collinear triple " + std::to_string((*t)[0]) +
                                                    "," + std::to_string((*t)[1]) + "," +
                                                    std::to_string((*t)[2]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) vertices_.emplace_back(i, j);

  const int nv = vertex_count();
  adjacency_.assign(static_cast<std::size_t>(nv), VertexSet{});
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (!segments_intersect(points_, vertices_[a], vertices_[b])) {
        adjacency_[a].set(b);
        adjacency_[b].set(a);
        ++edge_count_;
      }

  dist_.assign(static_cast<std::size_t>(nv * nv), kUnreachable);
  for (int s = 0; s < nv; ++s) {
    auto d = distances_from(*this, s);
    std::copy(d.begin(), d.end(), dist_.begin() + s * nv);
  }
}

VertexId DisjointnessGraph::index_of(const SegmentId& s) const {
  const int n = n_points();
  if (s.i < 0 || s.j >= n || s.i >= s.j)
    throw Error(ErrorCode::kInvalidArgument, "segment " + to_string(s) + " out of range");
  // Vertices (i, *) start after sum_{k<i} (n-1-k).
  return s.i * (2 * n - s.i - 1) / 2 + (s.j - s.i - 1);
}

DisjointnessGraph build_disjointness_graph(const PointSet& points) {
  return DisjointnessGraph(points);
}

std::vector<Distance> distances_from(const DisjointnessGraph& g, VertexId source) {
  const int nv = g.vertex_count();
  std::vector<Distance> d(static_cast<std::size_t>(nv), kUnreachable);
  VertexSet visited;
  visited.set(source);
  VertexSet frontier = visited;
  d[static_cast<std::size_t>(source)] = 0;
  for (Distance level = 1; !frontier.empty(); ++level) {
    VertexSet next;
    frontier.for_each([&](VertexId v) { next |= g.neighbors(v); });
    next.subtract(visited);
    next.for_each([&](VertexId v) { d[static_cast<std::size_t>(v)] = level; });
    visited |= next;
    frontier = next;
  }
  return d;
}

std::optional<Distance> diameter(const DisjointnessGraph& g) {
  Distance best = 0;
  const int nv = g.vertex_count();
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      const Distance d = g.distance(a, b);
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  return best;
}

bool is_connected(const DisjointnessGraph& g) {
  const auto d = distances_from(g, 0);
  for (Distance x : d)
    if (x == kUnreachable) return false;
  return true;
}

}  // namespace segvis
