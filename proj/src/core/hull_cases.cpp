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

// Case analyses for hulls of size 3 to 7.
//
// Every case is stated for one fixed labelling v_1..v_m "without loss of
// generality". We evaluate it under all 2m labellings (rotations and
// reflections), build the template wherever the hypothesis holds, and keep
// the first set that verifies. Cases run in their textual order.

#include <set>

#include "labeling.hpp"
#include "segvis/constructions.hpp"
#include "segvis/error.hpp"

namespace segvis {

namespace detail {
std::vector<SegmentId> good_triangle_blockers(const Labeling& l, PointIndex x);
}  // namespace detail

namespace {

using detail::Labeling;
using detail::Pts;
using detail::Regions;

constexpr int kMaxBlockers = 9;

class CaseRunner {
 public:
  CaseRunner(const DisjointnessGraph& g, Strategy strategy, std::vector<std::string>& diagnostics)
      : g_(g), strategy_(strategy), diagnostics_(diagnostics) {}

  std::optional<Certificate> attempt(std::optional<int> case_id, std::vector<SegmentId> s) {
    attempted_.insert(case_id.value_or(0));
    Certificate c = make_certificate(g_, std::move(s), strategy_, case_id);
    if (c.verified && c.size() <= kMaxBlockers) return c;
    return std::nullopt;
  }

  // Called once a case is exhausted without success.
  void close_case(int case_id) {
    if (attempted_.count(case_id) == 0) return;
    diagnostics_.push_back(to_string(strategy_) + "(" + std::to_string(case_id) +
                           "): hypothesis held but no template verified");
  }

 private:
  const DisjointnessGraph& g_;
  Strategy strategy_;
  std::vector<std::string>& diagnostics_;
  std::set<int> attempted_;
};

std::vector<SegmentId> hull_edges(const Labeling& l) {
  std::vector<SegmentId> s;
  for (int k = 1; k <= l.m(); ++k) s.push_back(l.e(k));
  return s;
}

std::vector<SegmentId> with(std::vector<SegmentId> s, std::initializer_list<SegmentId> more) {
  s.insert(s.end(), more.begin(), more.end());
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<Certificate> hull3_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics) {
  const PointSet& pts = g.points();
  const HullData hull = convex_hull(pts);
  if (hull.m() != 3) throw Error(ErrorCode::kInvalidArgument, "hull3 builder needs m = 3");
  CaseRunner run(g, Strategy::kHull3, diagnostics);
  for (const Labeling& l : detail::all_labelings(hull)) {
    const PointIndex u = l.v(1), v = l.v(2), w = l.v(3);
    const auto order = order_by_line_rotation(pts, u, v, l.sense, hull.interior);
    const PointIndex um = order.front(), up = order.back();
    if (!in_convex_position(pts[um], pts[up], pts[v], pts[w])) continue;
    if (auto c = run.attempt(std::nullopt, {SegmentId(u, um), SegmentId(u, up), SegmentId(um, up),
                                            SegmentId(v, um), SegmentId(w, um), SegmentId(v, up),
                                            SegmentId(w, up), SegmentId(v, w)}))
      return c;
  }
  diagnostics.push_back("Hull3: no labelling produced a verified set");
  return std::nullopt;
}

std::optional<Certificate> hull4_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics) {
  const PointSet& pts = g.points();
  const HullData hull = convex_hull(pts);
  if (hull.m() != 4) throw Error(ErrorCode::kInvalidArgument, "hull4 builder needs m = 4");
  CaseRunner run(g, Strategy::kHull4, diagnostics);
  for (const Labeling& l : detail::all_labelings(hull)) {
    // Interior points of the triangle cut off by the diagonals at edge v_3 v_4.
    Pts tri;
    for (PointIndex p : hull.interior)
      if (same_side(pts[l.v(3)], pts[l.v(1)], pts[p], pts[l.v(4)]) &&
          same_side(pts[l.v(4)], pts[l.v(2)], pts[p], pts[l.v(3)]))
        tri.push_back(p);
    if (tri.empty()) continue;
    const PointIndex vp = detail::closest_to_line(pts, l.v(3), l.v(4), tri);
    if (auto c = run.attempt(std::nullopt,
                             {l.vv(1, 2), l.vv(1, 3), SegmentId(l.v(1), vp), l.vv(1, 4), l.vv(2, 3),
                              SegmentId(l.v(2), vp), l.vv(2, 4), SegmentId(l.v(3), vp),
                              SegmentId(l.v(4), vp)}))
      return c;
  }
  diagnostics.push_back("Hull4: no labelling produced a verified set");
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::optional<Certificate> hull5_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics) {
  const PointSet& pts = g.points();
  const HullData hull = convex_hull(pts);
  if (hull.m() != 5) throw Error(ErrorCode::kInvalidArgument, "hull5 builder needs m = 5");
  const auto labelings = detail::all_labelings(hull);
  std::vector<Regions> regions;
  for (const auto& l : labelings) regions.emplace_back(pts, l);
  CaseRunner run(g, Strategy::kHull5Case, diagnostics);
  using detail::closest_to_line;
  using detail::closest_to_point;
  using detail::furthest_from_line;

  for (int cs = 1; cs <= 5; ++cs) {
    for (std::size_t k = 0; k < labelings.size(); ++k) {
      const Labeling& l = labelings[k];
      const Regions& r = regions[k];
      auto V = [&](int a) { return l.v(a); };
      auto E = [&](int a) { return l.e(a); };
      auto seg = [](PointIndex a, PointIndex b) { return SegmentId(a, b); };
      std::optional<Certificate> c;
      if (cs == 1) {
        if (!r.p(1).empty()) continue;
        c = run.attempt(1, {E(1), E(2), E(3), E(4), E(5), l.vv(1, 3), l.vv(1, 4), l.vv(2, 4),
                            l.vv(3, 5)});
      } else if (cs == 2) {
        if (r.pm(1).empty() || r.pm(3).empty() || r.p(5).empty()) continue;
        const PointIndex u1 = closest_to_line(pts, V(1), V(2), r.pm(1));
        const PointIndex u3 = closest_to_line(pts, V(3), V(4), r.pm(3));
        const PointIndex u5 = furthest_from_line(pts, V(1), V(4), r.p(5));
        c = run.attempt(2, {E(1), seg(u1, V(1)), seg(u1, V(2)), E(3), seg(u3, V(3)),
                            seg(u3, V(4)), seg(u5, V(5))});
      } else if (cs == 3) {
        if (r.pm(1).empty() || r.pp(1).empty() || r.p0(3).empty() || r.p0(4).empty()) continue;
        const PointIndex u1 = closest_to_line(pts, V(1), V(2), r.pm(1));
        const PointIndex u5 = closest_to_line(pts, V(5), V(1), r.pp(1));
        const PointIndex u3 = closest_to_point(pts, V(3), r.p0(3));
        const PointIndex u4 = closest_to_point(pts, V(4), r.p0(4));
        c = run.attempt(3, {E(1), seg(u1, V(1)), seg(u1, V(2)), E(5), seg(u5, V(5)),
                            seg(u5, V(1)), seg(u3, V(3)), seg(u4, V(4))});
      } else if (cs == 4) {
        if (r.pm(1).empty() || r.p0(3).empty() || r.p0(4).empty() || r.p0(5).empty()) continue;
        const PointIndex u1 = closest_to_line(pts, V(1), V(2), r.pm(1));
        const PointIndex u3 = closest_to_point(pts, V(3), r.p0(3));
        const PointIndex u4 = closest_to_point(pts, V(4), r.p0(4));
        const PointIndex u5 = closest_to_point(pts, V(5), r.p0(5));
        c = run.attempt(4, {E(1), seg(u1, V(1)), seg(u1, V(2)), seg(u3, V(3)), seg(u4, V(4)),
                            seg(u5, V(5))});
      } else {
        bool ok = true;
        for (int i = 1; i <= 5; ++i) ok = ok && !r.p0(i).empty() && r.p(i) == r.p0(i);
        if (!ok) continue;
        std::vector<SegmentId> s;
        for (int i = 1; i <= 5; ++i) s.emplace_back(closest_to_point(pts, V(i), r.p0(i)), V(i));
        c = run.attempt(5, s);
      }
      if (c) return c;
    }
    run.close_case(cs);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::optional<Certificate> hull6_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics) {
  const PointSet& pts = g.points();
  const HullData hull = convex_hull(pts);
  if (hull.m() != 6) throw Error(ErrorCode::kInvalidArgument, "hull6 builder needs m = 6");
  const int n = pts.size();
  const auto labelings = detail::all_labelings(hull);
  CaseRunner run(g, Strategy::kHull6Case, diagnostics);
  using detail::closest_to_point;
  using detail::furthest_from_line;
  auto seg = [](PointIndex a, PointIndex b) { return SegmentId(a, b); };
  auto g2s = [](SegmentId uv, SegmentId xy, SegmentId el, SegmentId er) {
    return detail::good_2set_blockers({uv, xy, el, er});
  };

  if (n == 6) {
    const Labeling& l = labelings.front();
    if (auto c = run.attempt(1, with(hull_edges(l), {l.vv(1, 4), l.vv(2, 5), l.vv(3, 6)})))
      return c;
    run.close_case(1);
    return std::nullopt;
  }

  if (n == 7) {
    const PointIndex x = hull.interior.front();
    const Point& px = pts[x];
    for (int i = 0; i < 6; ++i) {
      const Point& vi = pts[hull.at(i)];
      const Point& vi1 = pts[hull.at(i + 1)];
      if (!same_side(vi, pts[hull.at(i + 3)], px, vi1) ||
          !same_side(vi1, pts[hull.at(i + 4)], px, vi))
        continue;
      const bool near_side = same_side(pts[hull.at(i + 2)], pts[hull.at(i + 5)], px, vi);
      const int first = near_side ? i : i + 3;
      for (int pos : {first, first == i ? i + 3 : i}) {
        Certificate c = s_from_good_triangle(g, {x, ((pos % 6) + 6) % 6});
        if (auto r = run.attempt(2, c.blockers)) return r;
      }
    }
    if (auto t = find_good_triangle(pts)) {
      Certificate c = s_from_good_triangle(g, *t);
      if (auto r = run.attempt(2, c.blockers)) return r;
    }
    run.close_case(2);
    return std::nullopt;
  }

  std::vector<Regions> regions;
  for (const auto& l : labelings) regions.emplace_back(pts, l);

  for (int cs = 3; cs <= 8; ++cs) {
    // Case 7 has three sub-steps, each tried over every labelling in turn.
    const int substeps = cs == 7 ? 3 : 1;
    for (int sub = 0; sub < substeps; ++sub)
      for (std::size_t k = 0; k < labelings.size(); ++k) {
        const Labeling& l = labelings[k];
        const Regions& r = regions[k];
        auto V = [&](int a) { return l.v(a); };
        auto E = [&](int a) { return l.e(a); };
        std::optional<Certificate> c;
        if (cs == 3) {
          if (r.p(1).empty() || r.p(4).empty()) continue;
          const PointIndex u1 = furthest_from_line(pts, V(2), V(6), r.p(1));
          const PointIndex u4 = furthest_from_line(pts, V(3), V(5), r.p(4));
          c = run.attempt(3, g2s(l.vv(2, 3), l.vv(5, 6), seg(V(4), u4), seg(V(1), u1)));
        } else if (cs == 4) {
          const int nonempty =
              !r.pm(2).empty() + !r.p0(2).empty() + !r.pp(2).empty();
          if (nonempty < 2) continue;
          const PointIndex u2 = furthest_from_line(pts, V(1), V(3), r.p(2));
          auto branch_a = [&]() -> std::optional<Certificate> {
            if (r.p(3).empty()) return std::nullopt;
            const PointIndex u = furthest_from_line(pts, V(2), V(4), r.p(3));
            return run.attempt(4, g2s(seg(u2, V(2)), l.vv(4, 5), seg(u, V(3)), l.vv(1, 6)));
          };
          auto branch_b = [&]() -> std::optional<Certificate> {
            if (r.p(1).empty()) return std::nullopt;
            const PointIndex u = furthest_from_line(pts, V(2), V(6), r.p(1));
            return run.attempt(4, g2s(seg(u2, V(2)), l.vv(5, 6), l.vv(3, 4), seg(u, V(1))));
          };
          bool a_first;
          if (detail::contains(r.p0(2), u2))
            a_first = !r.pm(2).empty();
          else
            a_first = detail::contains(r.pp(2), u2);
          c = a_first ? branch_a() : branch_b();
          if (!c) c = a_first ? branch_b() : branch_a();
        } else if (cs == 5) {
          if (r.pm(1).empty() || r.p0(3).empty()) continue;
          const PointIndex u2 = furthest_from_line(pts, V(1), V(3), r.pm(1));
          const PointIndex u3 = furthest_from_line(pts, V(2), V(4), r.p(3));
          c = run.attempt(5, g2s(seg(u2, V(2)), l.vv(4, 5), seg(u3, V(3)), l.vv(1, 6)));
        } else if (cs == 6) {
          if (r.pm(1).empty()) continue;
          if (r.pm(1).size() == 1) {
            c = run.attempt(6, detail::good_triangle_blockers(l.shifted(-2), r.pm(1).front()));
          } else {
            const PointIndex x = r.pm(1)[0], y = r.pm(1)[1];
            c = run.attempt(6, {E(1), E(3), E(5), l.vv(1, 4), l.vv(2, 5), l.vv(3, 6), l.vv(2, 6),
                                l.vv(1, 3), seg(x, y)});
          }
        } else if (cs == 7) {
          if (r.p0(1).empty()) continue;
          const PointIndex u1 = closest_to_point(pts, V(1), r.p0(1));
          if (sub == 0) {
            if (r.p0(2).empty()) continue;
            const PointIndex u2 = furthest_from_line(pts, V(1), V(3), r.p(2));
            c = run.attempt(7, g2s(seg(V(1), u1), l.vv(3, 4), l.vv(5, 6), seg(V(2), u2)));
          } else if (sub == 1) {
            if (r.p0(3).empty()) continue;
            const PointIndex u3 = closest_to_point(pts, V(3), r.p0(3));
            c = run.attempt(7, {E(1), E(2), E(5), seg(V(1), u1), l.vv(2, 5), l.vv(2, 6),
                                l.vv(3, 5), l.vv(3, 6), seg(V(4), u3)});
          } else {
            const Pts rest = detail::minus(detail::unite(r.p0(1), r.pc()), Pts{u1});
            if (rest.empty()) continue;
            c = run.attempt(7, {E(1), E(3), E(5), l.vv(1, 3), l.vv(1, 4), l.vv(2, 5), l.vv(3, 6),
                                l.vv(2, 6), seg(u1, rest.front())});
          }
        } else {
          if (r.pc().size() < 2) continue;
          c = run.attempt(8, {E(1), E(3), E(5), l.vv(1, 4), l.vv(2, 5), l.vv(3, 6),
                              seg(r.pc()[0], r.pc()[1])});
        }
        if (c) return c;
      }
    run.close_case(cs);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

// Segments between hull vertices that xy crosses.
std::vector<SegmentId> crossed_chords(const PointSet& pts, const HullData& hull, SegmentId xy) {
  std::vector<SegmentId> out;
  for (int a = 0; a < hull.m(); ++a)
    for (int b = a + 1; b < hull.m(); ++b) {
      const SegmentId s(hull.hull[static_cast<std::size_t>(a)],
                        hull.hull[static_cast<std::size_t>(b)]);
      if (crosses(pts, xy, s)) out.push_back(s);
    }
  return out;
}

// Hull edges plus xy plus every chord it crosses; nullopt if more than one.
std::optional<std::vector<SegmentId>> edges_plus_chord(const PointSet& pts, const HullData& hull,
                                                       const Labeling& l, SegmentId xy) {
  const auto chords = crossed_chords(pts, hull, xy);
  if (chords.size() > 1) return std::nullopt;
  auto s = with(hull_edges(l), {xy});
  s.insert(s.end(), chords.begin(), chords.end());
  return s;
}

}  // namespace

std::optional<Certificate> hull7_certificate(const DisjointnessGraph& g,
                                             std::vector<std::string>& diagnostics) {
  const PointSet& pts = g.points();
  const HullData hull = convex_hull(pts);
  if (hull.m() != 7) throw Error(ErrorCode::kInvalidArgument, "hull7 builder needs m = 7");
  const auto labelings = detail::all_labelings(hull);
  CaseRunner run(g, Strategy::kHull7Case, diagnostics);
  using detail::furthest_from_line;
  auto seg = [](PointIndex a, PointIndex b) { return SegmentId(a, b); };
  auto g2s = [](SegmentId uv, SegmentId xy, SegmentId el, SegmentId er) {
    return detail::good_2set_blockers({uv, xy, el, er});
  };

  if (hull.interior.empty()) {
    if (auto c = run.attempt(1, hull_edges(labelings.front()))) return c;
    run.close_case(1);
    return std::nullopt;
  }

  std::vector<Regions> regions;
  for (const auto& l : labelings) regions.emplace_back(pts, l);

  for (std::size_t k = 0; k < labelings.size(); ++k) {
    const Labeling& l = labelings[k];
    const Regions& r = regions[k];
    if (r.p(1).empty()) continue;
    const PointIndex x = furthest_from_line(pts, l.v(2), l.v(7), r.p(1));
    if (auto c = run.attempt(2, g2s(l.vv(2, 3), l.vv(6, 7), seg(l.v(1), x), l.vv(4, 5))))
      return c;
  }
  run.close_case(2);

  const Labeling& base = labelings.front();
  for (std::size_t a = 0; a < hull.interior.size(); ++a)
    for (std::size_t b = a + 1; b < hull.interior.size(); ++b) {
      const auto s = edges_plus_chord(pts, hull, base, seg(hull.interior[a], hull.interior[b]));
      if (!s) continue;
      if (auto c = run.attempt(3, *s)) return c;
    }
  run.close_case(3);

  for (int cs = 4; cs <= 7; ++cs) {
    for (std::size_t k = 0; k < labelings.size(); ++k) {
      const Labeling& l = labelings[k];
      const Regions& r = regions[k];
      auto V = [&](int a) { return l.v(a); };
      auto E = [&](int a) { return l.e(a); };
      std::optional<Certificate> c;
      if (cs == 4) {
        if (r.q(1).size() != 1 || r.q(3).size() != 1) continue;
        const PointIndex u1 = r.q(1).front(), u3 = r.q(3).front();
        c = run.attempt(4, {E(3), E(4), seg(V(3), u1), seg(V(5), u1), E(6), seg(V(6), u3),
                            seg(V(7), u3), E(1)});
      } else if (cs == 5) {
        if (r.c(1).empty() || !r.q(1).empty()) continue;
        const PointIndex x = r.c(1).front();
        const Pts c4q3 = detail::intersect(r.c(4), r.qe(3));
        if (c4q3.empty()) {
          c = run.attempt(5, {E(1), E(2), E(4), E(7), seg(V(1), x), seg(V(3), x), seg(V(6), x),
                              l.vv(1, 4), l.vv(1, 5)});
        } else if (c4q3.size() >= 2) {
          if (auto s = edges_plus_chord(pts, hull, l, seg(c4q3[0], c4q3[1])))
            c = run.attempt(5, *s);
        } else {
          const PointIndex u = c4q3.front();
          c = run.attempt(5, {E(1), E(5), E(6), E(7), seg(V(3), u), seg(V(4), u), E(3),
                              l.vv(1, 4), l.vv(3, 6)});
        }
      } else if (cs == 6) {
        if (r.q(1).size() != 1 || r.q(2).size() != 1) continue;
        const PointIndex u1 = r.q(1).front(), u2 = r.q(2).front();
        if (!r.cp(5).empty()) {
          if (auto s = edges_plus_chord(pts, hull, l, seg(r.cp(5).front(), u1)))
            c = run.attempt(6, *s);
        } else if (!r.qe(5).empty()) {
          const PointIndex x = order_by_line_rotation(pts, V(4), V(6), l.sense, r.qe(5)).front();
          if (x == u1)
            c = run.attempt(6, g2s(l.vv(5, 6), l.vv(2, 3), seg(V(4), x), l.vv(1, 7)));
          else if (x == u2)
            c = run.attempt(6, g2s(l.vv(1, 7), l.vv(4, 5), seg(V(6), x), l.vv(2, 3)));
        }
      } else {
        if (r.q(1).size() != 1) continue;
        const PointIndex x = r.q(1).front();
        c = run.attempt(7, g2s(l.vv(3, 4), l.vv(6, 7), l.vv(1, 2), seg(V(5), x)));
      }
      if (c) return c;
    }
    run.close_case(cs);
  }
  return std::nullopt;
}

}  // namespace segvis
