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

// Mutual-visibility checks on a disjointness graph.
//
// Two members a, b of U are U-visible when some shortest a-b path of the full
// graph has all its internal vertices outside U. We decide this with a
// breadth-first search restricted to (V \ U) + {a, b}: the pair is visible
// iff the restricted distance equals the unrestricted one.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segvis/graph.hpp"

namespace segvis {

enum class Condition { kAdjacent = 1, kDist2 = 2, kDist3 = 3, kDist4 = 4 };

std::string to_string(Condition c);

struct PairVerdict {
  VertexId a = 0;
  VertexId b = 0;
  bool visible = false;
  Distance distance = kUnreachable;
  // Full vertex path a .. b (distance + 1 entries); set iff visible and not
  // adjacent.
  std::optional<std::vector<VertexId>> witness;
  std::optional<Condition> condition;
};

// Throws kInvalidArgument unless a != b and both belong to U.
PairVerdict is_mutually_visible(const DisjointnessGraph& g, const VertexSet& u, VertexId a,
                                VertexId b);

struct VisibilityCheck {
  bool ok = true;
  // First failing pair in lexicographic (a, b) order.
  std::optional<PairVerdict> failing;
};

VisibilityCheck is_mutual_visibility_set(const DisjointnessGraph& g, const VertexSet& u);

// Same answer as is_mutual_visibility_set without diagnostics. Pairs are
// screened in ascending distance so cheap failures surface first.
bool is_mutual_visibility_set_fast(const DisjointnessGraph& g, const VertexSet& u);

// Which visibility condition (adjacent, or a shortest path of length 2, 3 or
// 4 through blockers only) the pair (a, b) meets with internal vertices drawn
// from the blocker set S. Distance 4 is only accepted for five-point sets.
// nullopt when no condition holds. a and b must lie outside S.
std::optional<Condition> classify_pair(const DisjointnessGraph& g, const VertexSet& s,
                                       VertexId a, VertexId b);

}  // namespace segvis
