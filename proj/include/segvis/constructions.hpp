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

// Blocker-set certificates for the mutual-visibility lower bound.
//
// A blocker set S certifies mu(D(P)) >= C(n,2) - |S| once V \ S is checked to
// be a mutual-visibility set. The builders below follow the constructive
// case analysis dispatched on the hull size m; every set they emit has been
// run through the verifier.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segvis/geometry.hpp"
#include "segvis/graph.hpp"

namespace segvis {

enum class Strategy {
  kFiveDisjointClean,
  kGoodTriangle,
  kGood2Set,
  kHull3,
  kHull4,
  kHull5Case,
  kHull6Case,
  kHull7Case,
  kHull89,
  kHull10Plus,
  kFallbackSearch,
};

std::string to_string(Strategy s);

struct Certificate {
  std::vector<SegmentId> blockers;  // sorted, distinct
  Strategy strategy = Strategy::kFallbackSearch;
  std::optional<int> case_id;
  bool verified = false;
  int mu_lower_bound = 0;
  // Cases whose hypothesis held but whose template failed verification, and
  // similar triage notes. Empty on the normal path.
  std::vector<std::string> diagnostics;

  int size() const { return static_cast<int>(blockers.size()); }
};

// Checks V \ S and fills a certificate; `verified` reflects the outcome.
Certificate make_certificate(const DisjointnessGraph& g, std::vector<SegmentId> blockers,
                             Strategy strategy, std::optional<int> case_id = std::nullopt);

// Region sets attached to a labelled hull v_1..v_m (stored 0-based: index k
// holds label k+1). Each list is ascending.
struct RegionDecomposition {
  std::vector<PointIndex> hull;
  // Interior of triangle v_{i-1} v_i v_{i+1}, and its three parts: the part
  // shared with P_{i+1} (near e_i), the part shared with P_{i-1}, and the rest.
  std::vector<std::vector<PointIndex>> p, p_minus, p_zero, p_plus;
  // Interior points outside every P_i.
  std::vector<PointIndex> p_center;
  // Only for m = 7: interior of quadrilateral v_{i-1} v_i v_{i+1} v_{i+2};
  // interior of triangle v_i v_{i+3} v_{i+4}; and the derived C_i, C'_i, Q_i.
  std::vector<std::vector<PointIndex>> q_edge, triangle, c, c_prime, q;
};

// Regions for the clockwise hull. Requires 5 <= m <= 7.
RegionDecomposition decompose_regions(const PointSet& points, const HullData& hull);

// Regions for an arbitrary cyclic labelling of the hull vertices (either
// orientation).
RegionDecomposition decompose_regions(const PointSet& points, std::vector<PointIndex> labelled_hull);

std::optional<std::vector<SegmentId>> find_five_disjoint_clean(const PointSet& points);

struct GoodTriangle {
  PointIndex x = 0;
  int i = 0;  // clockwise hull position of v_i; the triangle is x v_i v_{i+1}
};

bool is_good_triangle(const PointSet& points, const HullData& hull, const GoodTriangle& t);
std::optional<GoodTriangle> find_good_triangle(const PointSet& points);
// Nine-segment set around a good triangle; requires m >= 6.
Certificate s_from_good_triangle(const DisjointnessGraph& g, const GoodTriangle& t);

struct Good2Set {
  SegmentId uv;
  SegmentId xy;
  SegmentId e_l;
  SegmentId e_r;
};

// The six segments of the K4 drawing on the endpoints of uv and xy.
std::vector<SegmentId> k4_drawing(const SegmentId& uv, const SegmentId& xy);
bool is_good_2set(const PointSet& points, const Good2Set& q);
std::optional<Good2Set> find_good_2set(const PointSet& points);
Certificate s_from_good_2set(const DisjointnessGraph& g, const Good2Set& q);

// Hull-size specific builders. Each returns nullopt when its applicable case
// templates all fail verification (details appended to `diagnostics`).
std::optional<Certificate> hull3_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics);
std::optional<Certificate> hull4_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics);
std::optional<Certificate> hull5_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics);
std::optional<Certificate> hull6_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics);
std::optional<Certificate> hull7_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics);
std::optional<Certificate> hull89_certificate(const DisjointnessGraph& g,
                                              std::vector<std::string>& diagnostics);
std::optional<Certificate> hull10plus_certificate(const DisjointnessGraph& g,
                                                  std::vector<std::string>& diagnostics);

struct FallbackBudget {
  long max_candidates = 1'000'000;
  std::chrono::milliseconds max_time{30'000};
  std::uint64_t seed = 0;
};

std::optional<Certificate> fallback_search(const DisjointnessGraph& g, int max_size = 9,
                                           const FallbackBudget& budget = {});

// Dispatches on the hull size; falls back to fallback_search when the
// constructive route fails. Throws kConstruction if even that is exhausted.
Certificate build_certificate(const DisjointnessGraph& g);

}  // namespace segvis
