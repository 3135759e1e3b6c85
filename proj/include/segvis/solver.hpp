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

// Exact mutual-visibility number by exhaustive subset search.
//
// Candidate sets of size k are enumerated through their complements (blocker
// sets of size |V| - k) in lexicographic combination order. Mutual visibility
// is closed under taking subsets, so once size k is refuted every larger size
// is too, and a descending search may stop at the first size with a passing
// set.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segvis/constructions.hpp"
#include "segvis/graph.hpp"

namespace segvis {

struct SolverOptions {
  int threads = 1;
  // Wall-clock budget for the whole call; nullopt means unbounded.
  std::optional<std::chrono::milliseconds> time_budget;
  // A known mutual-visibility set; used instead of searching at its size.
  std::optional<VertexSet> witness_hint;
};

struct SizeSearch {
  bool found = false;
  bool timed_out = false;
  // First passing set (lexicographic on complements) when found.
  VertexSet witness;
  // Complements visited in the logical serial order: rank + 1 when found,
  // all of them when refuted.
  std::uint64_t sets_examined = 0;
};

// Exhaustive search for a mutual-visibility set of size k.
SizeSearch search_size(const DisjointnessGraph& g, int k, const SolverOptions& options = {});

// True iff no mutual-visibility set of size k exists. Requires 0 < k <= |V|.
bool refute_size(const DisjointnessGraph& g, int k, const SolverOptions& options = {});

struct MuResult {
  // Exact value, or nullopt when the time budget ran out first.
  std::optional<int> mu;
  int mu_lower = 0;
  int mu_upper = 0;
  VertexSet witness;  // verified, |witness| = mu_lower
  // Smallest size shown impossible by full enumeration.
  std::optional<int> refuted_size;
  std::uint64_t refutation_sets_examined = 0;
  std::uint64_t total_sets_examined = 0;
  std::chrono::milliseconds elapsed{0};
  bool timed_out = false;
};

// Default starting size of the descent: C(n,2) - 4 for n >= 9, else
// C(n,2) - 1.
int default_upper_hint(int n_points);

// Throws kDisconnected unless the graph is connected.
MuResult mu_exact(const DisjointnessGraph& g, std::optional<int> lower_hint = std::nullopt,
                  std::optional<int> upper_hint = std::nullopt, const SolverOptions& options = {});

struct BoundsReport {
  int n = 0;
  int vertices = 0;
  Certificate certificate;
  std::optional<MuResult> exact;
  // C(n,2) - 9 always; C(n,2) - 4 when n >= 9.
  int theorem_lower = 0;
  std::optional<int> theorem_upper;
  std::vector<std::string> violations;

  bool consistent() const { return violations.empty(); }
};

// Certificate plus, when |V| <= exact_vertex_limit, the exact value, checked
// against the general lower and upper bounds.
BoundsReport check_bounds_report(const PointSet& points, const SolverOptions& options = {},
                                 int exact_vertex_limit = 45);

}  // namespace segvis
