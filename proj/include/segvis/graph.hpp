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

#pragma once

#include <optional>
#include <vector>

#include "segvis/geometry.hpp"
#include "segvis/vertex_set.hpp"

namespace segvis {

// Hop count between vertices; kUnreachable marks different components.
using Distance = int;
inline constexpr Distance kUnreachable = -1;

// Disjointness graph of segments: one vertex per segment of the complete
// drawing (lexicographic by endpoint pair), adjacency = closed segments are
// disjoint. Immutable once built; all-pairs distances are computed eagerly.
class DisjointnessGraph {
 public:
  explicit DisjointnessGraph(PointSet points);

  const PointSet& points() const { return points_; }
  int n_points() const { return points_.size(); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return edge_count_; }

  const std::vector<SegmentId>& vertices() const { return vertices_; }
  const SegmentId& segment(VertexId v) const { return vertices_[static_cast<std::size_t>(v)]; }
  VertexId index_of(const SegmentId& s) const;

  const VertexSet& neighbors(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(VertexId a, VertexId b) const { return neighbors(a).test(b); }
  int degree(VertexId v) const { return neighbors(v).size(); }
  VertexSet all() const { return VertexSet::full(vertex_count()); }

  Distance distance(VertexId a, VertexId b) const {
    return dist_[static_cast<std::size_t>(a * vertex_count() + b)];
  }

 private:
  PointSet points_;
  std::vector<SegmentId> vertices_;
  std::vector<VertexSet> adjacency_;
  std::vector<Distance> dist_;
  int edge_count_ = 0;
};

DisjointnessGraph build_disjointness_graph(const PointSet& points);

// Breadth-first hop counts from `source` (kUnreachable where not reachable).
std::vector<Distance> distances_from(const DisjointnessGraph& g, VertexId source);

// Largest pairwise distance; nullopt when the graph is disconnected.
std::optional<Distance> diameter(const DisjointnessGraph& g);

bool is_connected(const DisjointnessGraph& g);

inline int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace segvis
