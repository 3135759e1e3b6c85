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

// Internal helpers shared by the certificate builders: hull relabellings,
// small sorted point-list algebra and exact extremal selections.

#pragma once

#include <algorithm>
#include <vector>

#include "segvis/constructions.hpp"
#include "segvis/geometry.hpp"

namespace segvis::detail {

using Pts = std::vector<PointIndex>;

inline int wrap(int k, int m) { return ((k % m) + m) % m; }

inline Pts intersect(const Pts& a, const Pts& b) {
  Pts out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
inline Pts unite(const Pts& a, const Pts& b) {
  Pts out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
inline Pts minus(const Pts& a, const Pts& b) {
  Pts out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
inline bool contains(const Pts& a, PointIndex p) { return std::binary_search(a.begin(), a.end(), p); }

// Exact extremal picks; ties go to the lowest point index (lists are sorted).
PointIndex closest_to_line(const PointSet& pts, PointIndex a, PointIndex b, const Pts& cand);
PointIndex furthest_from_line(const PointSet& pts, PointIndex a, PointIndex b, const Pts& cand);
PointIndex closest_to_point(const PointSet& pts, PointIndex c, const Pts& cand);

// A cyclic labelling v_1..v_m of the hull: a rotation of the clockwise order,
// possibly reflected. `sense` is the rotational sense in which labels
// increase.
struct Labeling {
  std::vector<PointIndex> seq;
  Orientation sense = Orientation::kClockwise;

  int m() const { return static_cast<int>(seq.size()); }
  PointIndex v(int label) const { return seq[static_cast<std::size_t>(wrap(label - 1, m()))]; }
  SegmentId e(int label) const { return {v(label), v(label + 1)}; }
  SegmentId vv(int a, int b) const { return {v(a), v(b)}; }
  // Same orientation, with new label k naming old label k + delta.
  Labeling shifted(int delta) const;
};

// All 2m labellings: every rotation of the clockwise order, then every
// rotation of the reflected order.
std::vector<Labeling> all_labelings(const HullData& hull);

// Regions of a labelling, addressed by 1-based label (mod m).
class Regions {
 public:
  Regions(const PointSet& pts, const Labeling& l)
      : rd_(decompose_regions(pts, l.seq)), m_(l.m()) {}

  const Pts& p(int k) const { return at(rd_.p, k); }
  const Pts& pm(int k) const { return at(rd_.p_minus, k); }
  const Pts& p0(int k) const { return at(rd_.p_zero, k); }
  const Pts& pp(int k) const { return at(rd_.p_plus, k); }
  const Pts& pc() const { return rd_.p_center; }
  const Pts& qe(int k) const { return at(rd_.q_edge, k); }
  const Pts& c(int k) const { return at(rd_.c, k); }
  const Pts& cp(int k) const { return at(rd_.c_prime, k); }
  const Pts& q(int k) const { return at(rd_.q, k); }

 private:
  const Pts& at(const std::vector<Pts>& v, int k) const {
    return v[static_cast<std::size_t>(wrap(k - 1, m_))];
  }
  RegionDecomposition rd_;
  int m_;
};

inline std::vector<SegmentId> good_2set_blockers(const Good2Set& q) {
  auto s = k4_drawing(q.uv, q.xy);
  s.push_back(q.e_l);
  s.push_back(q.e_r);
  return s;
}

}  // namespace segvis::detail
