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

#include "segvis/visibility.hpp"

#include <algorithm>

#include "segvis/error.hpp"

namespace segvis {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::kAdjacent: return "Adjacent";
    case Condition::kDist2: return "Dist2";
    case Condition::kDist3: return "Dist3";
    case Condition::kDist4: return "Dist4";
  }
  return "?";
}

namespace {

Condition condition_for(Distance d) {
  switch (d) {
    case 1: return Condition::kAdjacent;
    case 2: return Condition::kDist2;
    case 3: return Condition::kDist3;
    default: return Condition::kDist4;
  }
}

// Layered search from a inside `allowed`, stopping after `limit` layers.
// Returns the path to b when reached within the limit.
std::optional<std::vector<VertexId>> restricted_path(const DisjointnessGraph& g,
                                                     const VertexSet& allowed, VertexId a,
                                                     VertexId b, Distance limit) {
  std::vector<VertexSet> layers{VertexSet{a}};
  VertexSet visited{a};
  for (Distance level = 1; level <= limit; ++level) {
    VertexSet next;
    layers.back().for_each([&](VertexId v) { next |= g.neighbors(v); });
    next &= allowed;
    next.subtract(visited);
    if (next.empty()) return std::nullopt;
    if (next.test(b)) {
      std::vector<VertexId> path{b};
      VertexId cur = b;
      for (int k = level - 1; k >= 0; --k) {
        cur = (layers[static_cast<std::size_t>(k)] & g.neighbors(cur)).first();
        path.push_back(cur);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    visited |= next;
    layers.push_back(next);
  }
  return std::nullopt;
}

bool restricted_reachable(const DisjointnessGraph& g, const VertexSet& allowed, VertexId a,
                          VertexId b, Distance limit) {
  VertexSet frontier{a};
  VertexSet visited{a};
  for (Distance level = 1; level <= limit; ++level) {
    VertexSet next;
    frontier.for_each([&](VertexId v) { next |= g.neighbors(v); });
    next &= allowed;
    if (next.test(b)) return true;
    next.subtract(visited);
    if (next.empty()) return false;
    visited |= next;
    frontier = next;
  }
  return false;
}

bool pair_visible_fast(const DisjointnessGraph& g, const VertexSet& u, VertexId a, VertexId b) {
  const Distance d = g.distance(a, b);
  if (d == 1) return true;
  if (d == kUnreachable) return false;
  if (d == 2) return !((g.neighbors(a) & g.neighbors(b)) - u).empty();
  if (d == 3) {
    const VertexSet tail = g.neighbors(b) - u;
    bool found = false;
    (g.neighbors(a) - u).for_each([&](VertexId c) {
      if (!found && g.neighbors(c).intersects(tail)) found = true;
    });
    return found;
  }
  VertexSet allowed = g.all() - u;
  allowed.set(a);
  allowed.set(b);
  return restricted_reachable(g, allowed, a, b, d);
}

}  // namespace

PairVerdict is_mutually_visible(const DisjointnessGraph& g, const VertexSet& u, VertexId a,
                                VertexId b) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "visibility pair must be distinct");
  if (!u.test(a) || !u.test(b))
    throw Error(ErrorCode::kInvalidArgument, "visibility pair must belong to the tested set");
  PairVerdict v;
  v.a = a;
  v.b = b;
  v.distance = g.distance(a, b);
  if (v.distance == kUnreachable) return v;
  if (v.distance == 1) {
    v.visible = true;
    v.condition = Condition::kAdjacent;
    return v;
  }
  VertexSet allowed = g.all() - u;
  allowed.set(a);
  allowed.set(b);
  if (auto path = restricted_path(g, allowed, a, b, v.distance)) {
    v.visible = true;
    v.condition = condition_for(v.distance);
    v.witness = std::move(path);
  }
  return v;
}

VisibilityCheck is_mutual_visibility_set(const DisjointnessGraph& g, const VertexSet& u) {
  const auto members = u.to_vector();
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x + 1; y < members.size(); ++y) {
      if (pair_visible_fast(g, u, members[x], members[y])) continue;
      return {false, is_mutually_visible(g, u, members[x], members[y])};
    }
  return {};
}

bool is_mutual_visibility_set_fast(const DisjointnessGraph& g, const VertexSet& u) {
  const auto members = u.to_vector();
  // Distance-2 pairs first, then the rest.
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t x = 0; x < members.size(); ++x) {
      const VertexId a = members[x];
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const VertexId b = members[y];
        const Distance d = g.distance(a, b);
        if (d == 1 || (pass == 0) != (d == 2)) continue;
        if (!pair_visible_fast(g, u, a, b)) return false;
      }
    }
  return true;
}

std::optional<Condition> classify_pair(const DisjointnessGraph& g, const VertexSet& s,
                                       VertexId a, VertexId b) {
  if (s.test(a) || s.test(b))
    throw Error(ErrorCode::kInvalidArgument, "classified pair must lie outside the blocker set");
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "classified pair must be distinct");
  auto disjoint = [&](VertexId x, VertexId y) { return g.adjacent(x, y); };
  const Distance d = g.distance(a, b);
  if (d == 1) return Condition::kAdjacent;
  const auto blockers = s.to_vector();
  if (d == 2) {
    for (VertexId f1 : blockers)
      if (disjoint(a, f1) && disjoint(b, f1)) return Condition::kDist2;
    return std::nullopt;
  }
  if (d == 3) {
    for (VertexId f1 : blockers)
      for (VertexId f2 : blockers)
        if (disjoint(a, f1) && disjoint(f1, f2) && disjoint(f2, b)) return Condition::kDist3;
    return std::nullopt;
  }
  if (d == 4 && g.n_points() == 5) {
    for (VertexId f1 : blockers)
      for (VertexId f2 : blockers)
        for (VertexId f3 : blockers) {
          if (!disjoint(a, f1) || !disjoint(f3, b)) continue;
          if (disjoint(a, f2) || disjoint(a, f3)) continue;
          if (disjoint(b, f1) || disjoint(b, f2)) continue;
          if (!disjoint(f1, f2) || !disjoint(f2, f3)) continue;
          if (disjoint(f1, f3)) continue;
          return Condition::kDist4;
        }
  }
  return std::nullopt;
}

}  // namespace segvis
