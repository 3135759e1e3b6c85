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

#include "segvis/constructions.hpp"

#include <random>

#include "labeling.hpp"
#include "segvis/error.hpp"
#include "segvis/visibility.hpp"

namespace segvis {

using detail::Labeling;
using detail::Pts;

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kFiveDisjointClean: return "FiveDisjointClean";
    case Strategy::kGoodTriangle: return "GoodTriangle";
    case Strategy::kGood2Set: return "Good2Set";
    case Strategy::kHull3: return "Hull3";
    case Strategy::kHull4: return "Hull4";
    case Strategy::kHull5Case: return "Hull5Case";
    case Strategy::kHull6Case: return "Hull6Case";
    case Strategy::kHull7Case: return "Hull7Case";
    case Strategy::kHull89: return "Hull89";
    case Strategy::kHull10Plus: return "Hull10Plus";
    case Strategy::kFallbackSearch: return "FallbackSearch";
  }
  return "?";
}

Certificate make_certificate(const DisjointnessGraph& g, std::vector<SegmentId> blockers,
                             Strategy strategy, std::optional<int> case_id) {
  std::sort(blockers.begin(), blockers.end());
  blockers.erase(std::unique(blockers.begin(), blockers.end()), blockers.end());
  Certificate c;
  c.strategy = strategy;
  c.case_id = case_id;
  VertexSet s;
  for (const auto& seg : blockers) s.set(g.index_of(seg));
  c.blockers = std::move(blockers);
  c.verified = is_mutual_visibility_set_fast(g, g.all() - s);
  c.mu_lower_bound = g.vertex_count() - c.size();
  return c;
}

namespace detail {

namespace {

template <typename Better>
PointIndex pick(const Pts& cand, Better better) {
  if (cand.empty()) throw Error(ErrorCode::kInternal, "extremal pick over an empty region");
  PointIndex best = cand.front();
  for (PointIndex p : cand)
    if (better(p, best)) best = p;
  return best;
}

}  // namespace

PointIndex closest_to_line(const PointSet& pts, PointIndex a, PointIndex b, const Pts& cand) {
  return pick(cand, [&](PointIndex p, PointIndex q) {
    return compare_line_distance(pts[a], pts[b], pts[p], pts[q]) < 0;
  });
}

PointIndex furthest_from_line(const PointSet& pts, PointIndex a, PointIndex b, const Pts& cand) {
  return pick(cand, [&](PointIndex p, PointIndex q) {
    return compare_line_distance(pts[a], pts[b], pts[p], pts[q]) > 0;
  });
}

PointIndex closest_to_point(const PointSet& pts, PointIndex c, const Pts& cand) {
  return pick(cand, [&](PointIndex p, PointIndex q) {
    return squared_distance(pts[c], pts[p]) < squared_distance(pts[c], pts[q]);
  });
}

Labeling Labeling::shifted(int delta) const {
  Labeling out;
  out.sense = sense;
  out.seq.resize(seq.size());
  for (int k = 1; k <= m(); ++k) out.seq[static_cast<std::size_t>(k - 1)] = v(k + delta);
  return out;
}

std::vector<Labeling> all_labelings(const HullData& hull) {
  std::vector<Labeling> out;
  const int m = hull.m();
  for (int reflected = 0; reflected < 2; ++reflected)
    for (int offset = 0; offset < m; ++offset) {
      Labeling l;
      l.sense = reflected ? Orientation::kCounterClockwise : Orientation::kClockwise;
      for (int k = 0; k < m; ++k) l.seq.push_back(hull.at(reflected ? offset - k : offset + k));
      out.push_back(std::move(l));
    }
  return out;
}

}  // namespace detail

RegionDecomposition decompose_regions(const PointSet& points, const HullData& hull) {
  return decompose_regions(points, hull.hull);
}

RegionDecomposition decompose_regions(const PointSet& points,
                                      std::vector<PointIndex> labelled_hull) {
  const int m = static_cast<int>(labelled_hull.size());
  if (m < 5 || m > 7)
    throw Error(ErrorCode::kInvalidArgument, "region decomposition needs a hull of size 5..7");
  RegionDecomposition rd;
  rd.hull = std::move(labelled_hull);
  auto v = [&](int k) -> const Point& {
    return points[rd.hull[static_cast<std::size_t>(detail::wrap(k, m))]];
  };
  std::vector<bool> on_hull(static_cast<std::size_t>(points.size()), false);
  for (PointIndex h : rd.hull) on_hull[static_cast<std::size_t>(h)] = true;
  Pts interior;
  for (PointIndex p = 0; p < points.size(); ++p)
    if (!on_hull[static_cast<std::size_t>(p)]) interior.push_back(p);

  const auto mm = static_cast<std::size_t>(m);
  rd.p.assign(mm, {});
  rd.p_minus.assign(mm, {});
  rd.p_zero.assign(mm, {});
  rd.p_plus.assign(mm, {});
  Pts covered;
  for (int i = 0; i < m; ++i) {
    for (PointIndex x : interior) {
      const Point& px = points[x];
      if (!in_triangle(v(i - 1), v(i), v(i + 1), px)) continue;
      rd.p[i].push_back(x);
      if (same_side(v(i), v(i + 2), px, v(i + 1)))
        rd.p_minus[i].push_back(x);
      else if (same_side(v(i), v(i - 2), px, v(i - 1)))
        rd.p_plus[i].push_back(x);
      else
        rd.p_zero[i].push_back(x);
    }
    covered = detail::unite(covered, rd.p[i]);
  }
  rd.p_center = detail::minus(interior, covered);

  if (m == 7) {
    rd.q_edge.assign(mm, {});
    rd.triangle.assign(mm, {});
    for (int i = 0; i < m; ++i)
      for (PointIndex x : interior) {
        const std::array<Point, 4> quad{v(i - 1), v(i), v(i + 1), v(i + 2)};
        if (in_convex_polygon(quad, points[x])) rd.q_edge[i].push_back(x);
        if (in_triangle(v(i), v(i + 3), v(i + 4), points[x])) rd.triangle[i].push_back(x);
      }
    auto at = [&](const std::vector<Pts>& s, int k) -> const Pts& {
      return s[static_cast<std::size_t>(detail::wrap(k, m))];
    };
    rd.c.assign(mm, {});
    rd.c_prime.assign(mm, {});
    rd.q.assign(mm, {});
    for (int i = 0; i < m; ++i) {
      const Pts removed = detail::unite(detail::unite(at(rd.q_edge, i + 2), at(rd.q_edge, i + 4)),
                                        at(rd.p, i));
      rd.c[i] = detail::minus(rd.triangle[i], removed);
      rd.c_prime[i] =
          detail::intersect(detail::intersect(rd.c[i], rd.q_edge[i]), at(rd.q_edge, i + 6));
      rd.q[i] = detail::minus(detail::intersect(at(rd.q_edge, i + 2), at(rd.q_edge, i + 4)),
                              detail::unite(at(rd.p, i + 3), at(rd.p, i + 4)));
    }
  }
  return rd;
}

std::optional<std::vector<SegmentId>> find_five_disjoint_clean(const PointSet& points) {
  const HullData hull = convex_hull(points);
  if (hull.m() >= 10) {
    std::vector<SegmentId> s;
    for (int k = 0; k < 5; ++k) s.emplace_back(hull.at(2 * k), hull.at(2 * k + 1));
    return s;
  }
  std::vector<SegmentId> clean;
  for (int i = 0; i < points.size(); ++i)
    for (int j = i + 1; j < points.size(); ++j)
      if (is_clean(points, SegmentId(i, j))) clean.emplace_back(i, j);
  std::vector<SegmentId> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == 5) return true;
    for (std::size_t k = from; k < clean.size(); ++k) {
      bool ok = true;
      for (const auto& c : chosen)
        if (segments_intersect(points, c, clean[k])) ok = false;
      if (!ok) continue;
      chosen.push_back(clean[k]);
      if (self(self, k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) return chosen;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Good triangles.

bool is_good_triangle(const PointSet& points, const HullData& hull, const GoodTriangle& t) {
  const int m = hull.m();
  if (m < 4 || hull.on_hull(t.x)) return false;
  const int i = t.i;
  const std::array<Point, 4> quad{points[hull.at(i - 1)], points[hull.at(i)],
                                  points[hull.at(i + 1)], points[hull.at(i + 2)]};
  if (!in_convex_polygon(quad, points[t.x])) return false;
  const std::array<SegmentId, 3> sides{SegmentId(t.x, hull.at(i)), SegmentId(t.x, hull.at(i + 1)),
                                       SegmentId(hull.at(i), hull.at(i + 1))};
  const std::array<SegmentId, 4> allowed{
      SegmentId(hull.at(i), hull.at(i + 2)), SegmentId(hull.at(i), hull.at(i + 3)),
      SegmentId(hull.at(i + 1), hull.at(i - 2)), SegmentId(hull.at(i + 1), hull.at(i - 1))};
  for (int a = 0; a < points.size(); ++a)
    for (int b = a + 1; b < points.size(); ++b) {
      const SegmentId s(a, b);
      if (std::find(sides.begin(), sides.end(), s) != sides.end()) continue;
      bool all = true;
      for (const auto& side : sides) all = all && segments_intersect(points, s, side);
      if (all && std::find(allowed.begin(), allowed.end(), s) == allowed.end()) return false;
    }
  return true;
}

std::optional<GoodTriangle> find_good_triangle(const PointSet& points) {
  const HullData hull = convex_hull(points);
  if (hull.m() < 6) return std::nullopt;
  for (PointIndex x : hull.interior)
    for (int i = 0; i < hull.m(); ++i)
      if (is_good_triangle(points, hull, {x, i})) return GoodTriangle{x, i};
  return std::nullopt;
}

namespace detail {

// Triangle x v_3 v_4 in labelling l.
std::vector<SegmentId> good_triangle_blockers(const Labeling& l, PointIndex x) {
  return {l.e(1),         l.e(3),         l.e(5),         SegmentId(x, l.v(3)), SegmentId(x, l.v(4)),
          l.vv(1, 4),     l.vv(2, 4),     l.vv(3, 5),     l.vv(3, 6)};
}

}  // namespace detail

Certificate s_from_good_triangle(const DisjointnessGraph& g, const GoodTriangle& t) {
  const HullData hull = convex_hull(g.points());
  if (hull.m() < 6) throw Error(ErrorCode::kInvalidArgument, "good-triangle set needs m >= 6");
  Labeling fwd;
  fwd.sense = Orientation::kClockwise;
  for (int k = 1; k <= hull.m(); ++k) fwd.seq.push_back(hull.at(t.i + k - 3));
  Certificate c = make_certificate(g, detail::good_triangle_blockers(fwd, t.x),
                                   Strategy::kGoodTriangle);
  if (c.verified) return c;
  Labeling rev;
  rev.sense = Orientation::kCounterClockwise;
  for (int k = 1; k <= hull.m(); ++k) rev.seq.push_back(hull.at(t.i + 1 - (k - 3)));
  Certificate r = make_certificate(g, detail::good_triangle_blockers(rev, t.x),
                                   Strategy::kGoodTriangle);
  if (!r.verified) r.diagnostics.push_back("good-triangle template failed verification");
  return r;
}

// ---------------------------------------------------------------------------
// Good 2-sets.

std::vector<SegmentId> k4_drawing(const SegmentId& uv, const SegmentId& xy) {
  const PointIndex u = uv.i, v = uv.j, x = xy.i, y = xy.j;
  return {uv, SegmentId(u, x), SegmentId(u, y), SegmentId(v, x), SegmentId(v, y), xy};
}

namespace {

struct Quadrants {
  SegmentId d1, d2;
  int s1 = 0, s2 = 0;  // signs of the quadrant holding uv
};

int side_sign(const Point& a, const Point& b, const Point& p) {
  return static_cast<int>(orientation(a, b, p));
}

// Side of the doubled midpoint of s with respect to the doubled line d.
int midpoint_sign(const PointSet& pts, const SegmentId& d, const SegmentId& s) {
  const Point a{2 * pts[d.i].x, 2 * pts[d.i].y};
  const Point b{2 * pts[d.j].x, 2 * pts[d.j].y};
  const Point mid{pts[s.i].x + pts[s.j].x, pts[s.i].y + pts[s.j].y};
  return side_sign(a, b, mid);
}

std::optional<Quadrants> quadrants_of(const PointSet& pts, const SegmentId& uv,
                                      const SegmentId& xy) {
  const std::array<PointIndex, 4> four{uv.i, uv.j, xy.i, xy.j};
  std::vector<SegmentId> diagonals;
  for (PointIndex a : {uv.i, uv.j})
    for (PointIndex b : {xy.i, xy.j}) {
      PointIndex others[2];
      int k = 0;
      for (PointIndex o : four)
        if (o != a && o != b) others[k++] = o;
      if (!same_side(pts[a], pts[b], pts[others[0]], pts[others[1]]))
        diagonals.emplace_back(a, b);
    }
  if (diagonals.size() != 2) return std::nullopt;
  Quadrants q;
  q.d1 = diagonals[0];
  q.d2 = diagonals[1];
  q.s1 = midpoint_sign(pts, q.d1, uv);
  q.s2 = midpoint_sign(pts, q.d2, uv);
  if (q.s1 == 0 || q.s2 == 0) return std::nullopt;
  if (midpoint_sign(pts, q.d1, xy) != -q.s1 || midpoint_sign(pts, q.d2, xy) != -q.s2)
    return std::nullopt;
  return q;
}

// 1 when s lies in the open quadrant L, 2 for R, 0 otherwise.
int quadrant_of(const PointSet& pts, const Quadrants& q, const SegmentId& s) {
  auto sig = [&](PointIndex p) {
    return std::pair{side_sign(pts[q.d1.i], pts[q.d1.j], pts[p]),
                     side_sign(pts[q.d2.i], pts[q.d2.j], pts[p])};
  };
  const auto a = sig(s.i);
  const auto b = sig(s.j);
  if (a != b) return 0;
  if (a == std::pair{q.s1, -q.s2}) return 1;
  if (a == std::pair{-q.s1, q.s2}) return 2;
  return 0;
}

bool uncrossed_outside(const PointSet& pts, const SegmentId& e, const std::vector<SegmentId>& d) {
  for (int a = 0; a < pts.size(); ++a)
    for (int b = a + 1; b < pts.size(); ++b) {
      const SegmentId s(a, b);
      if (std::find(d.begin(), d.end(), s) != d.end()) continue;
      if (crosses(pts, e, s)) return false;
    }
  return true;
}

bool good_2set_base(const PointSet& pts, const HullData& hull, const SegmentId& uv,
                    const SegmentId& xy) {
  if (uv == xy || segments_intersect(pts, uv, xy)) return false;
  if (!is_clean(pts, uv) || !is_clean(pts, xy)) return false;
  auto touches_hull = [&](const SegmentId& s) { return hull.on_hull(s.i) || hull.on_hull(s.j); };
  return touches_hull(uv) && touches_hull(xy);
}

}  // namespace

bool is_good_2set(const PointSet& points, const Good2Set& q) {
  const HullData hull = convex_hull(points);
  if (!good_2set_base(points, hull, q.uv, q.xy)) return false;
  const auto quads = quadrants_of(points, q.uv, q.xy);
  if (!quads) return false;
  const int ql = quadrant_of(points, *quads, q.e_l);
  const int qr = quadrant_of(points, *quads, q.e_r);
  if (ql == 0 || qr == 0 || ql == qr) return false;
  const auto d = k4_drawing(q.uv, q.xy);
  return uncrossed_outside(points, q.e_l, d) && uncrossed_outside(points, q.e_r, d);
}

std::optional<Good2Set> find_good_2set(const PointSet& points) {
  const HullData hull = convex_hull(points);
  std::vector<SegmentId> cand;
  for (int k = 0; k < hull.m(); ++k) cand.emplace_back(hull.at(k), hull.at(k + 1));
  for (int a = 0; a < points.size(); ++a)
    for (int b = a + 1; b < points.size(); ++b) {
      const SegmentId s(a, b);
      if (std::find(cand.begin(), cand.end(), s) != cand.end()) continue;
      if ((hull.on_hull(a) || hull.on_hull(b)) && is_clean(points, s)) cand.push_back(s);
    }
  for (std::size_t x = 0; x < cand.size(); ++x)
    for (std::size_t y = x + 1; y < cand.size(); ++y) {
      if (!good_2set_base(points, hull, cand[x], cand[y])) continue;
      const auto quads = quadrants_of(points, cand[x], cand[y]);
      if (!quads) continue;
      const auto d = k4_drawing(cand[x], cand[y]);
      std::optional<SegmentId> el, er;
      for (int a = 0; a < points.size() && !(el && er); ++a)
        for (int b = a + 1; b < points.size() && !(el && er); ++b) {
          const SegmentId s(a, b);
          const int qs = quadrant_of(points, *quads, s);
          if (qs == 0 || (qs == 1 && el) || (qs == 2 && er)) continue;
          if (!uncrossed_outside(points, s, d)) continue;
          (qs == 1 ? el : er) = s;
        }
      if (el && er) return Good2Set{cand[x], cand[y], *el, *er};
    }
  return std::nullopt;
}

Certificate s_from_good_2set(const DisjointnessGraph& g, const Good2Set& q) {
  return make_certificate(g, detail::good_2set_blockers(q), Strategy::kGood2Set);
}

// ---------------------------------------------------------------------------
// m >= 8.

std::optional<Certificate> hull89_certificate(const DisjointnessGraph& g,
                                              std::vector<std::string>& diagnostics) {
  const HullData hull = convex_hull(g.points());
  if (hull.m() != 8 && hull.m() != 9)
    throw Error(ErrorCode::kInvalidArgument, "hull89 builder needs m in {8, 9}");
  for (const Labeling& l : detail::all_labelings(hull)) {
    const Good2Set q{l.e(1), l.vv(5, 6), l.vv(7, 8), l.vv(3, 4)};
    Certificate c = make_certificate(g, detail::good_2set_blockers(q), Strategy::kHull89);
    if (c.verified) return c;
    diagnostics.push_back("Hull89 template failed for one labelling");
  }
  if (auto q = find_good_2set(g.points())) {
    Certificate c = make_certificate(g, detail::good_2set_blockers(*q), Strategy::kHull89);
    if (c.verified) return c;
  }
  return std::nullopt;
}

std::optional<Certificate> hull10plus_certificate(const DisjointnessGraph& g,
                                                  std::vector<std::string>& diagnostics) {
  const HullData hull = convex_hull(g.points());
  if (hull.m() < 10) throw Error(ErrorCode::kInvalidArgument, "hull10+ builder needs m >= 10");
  auto s = find_five_disjoint_clean(g.points());
  Certificate c = make_certificate(g, *s, Strategy::kHull10Plus);
  if (c.verified) return c;
  diagnostics.push_back("five alternating hull edges failed verification");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fallback.

std::optional<Certificate> fallback_search(const DisjointnessGraph& g, int max_size,
                                           const FallbackBudget& budget) {
  const PointSet& pts = g.points();
  const HullData hull = convex_hull(pts);
  const auto t0 = std::chrono::steady_clock::now();
  long examined = 0;
  auto out_of_budget = [&](long limit) {
    if (examined >= limit) return true;
    if ((examined & 1023) == 0 && std::chrono::steady_clock::now() - t0 > budget.max_time)
      return true;
    return false;
  };

  // Structured pool: hull edges, then other clean segments, then stars at
  // hull vertices.
  std::vector<VertexId> pool;
  auto add = [&](const SegmentId& s) {
    const VertexId v = g.index_of(s);
    if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
  };
  for (int k = 0; k < hull.m(); ++k) add(SegmentId(hull.at(k), hull.at(k + 1)));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (is_clean(pts, g.segment(v))) add(g.segment(v));
  for (PointIndex h : hull.hull)
    for (PointIndex p = 0; p < pts.size(); ++p)
      if (p != h) add(SegmentId(h, p));

  const long structured_limit = budget.max_candidates / 2;
  std::optional<VertexSet> found;
  std::vector<std::size_t> comb;
  for (int size = 0; size <= max_size && !found; ++size) {
    if (static_cast<std::size_t>(size) > pool.size()) break;
    comb.resize(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) comb[static_cast<std::size_t>(k)] = static_cast<std::size_t>(k);
    while (!found && !out_of_budget(structured_limit)) {
      VertexSet s;
      for (std::size_t k : comb) s.set(pool[k]);
      ++examined;
      if (is_mutual_visibility_set_fast(g, g.all() - s)) {
        found = s;
        break;
      }
      int k = size - 1;
      while (k >= 0 && comb[static_cast<std::size_t>(k)] == pool.size() - size + k) --k;
      if (k < 0) break;
      ++comb[static_cast<std::size_t>(k)];
      for (int t = k + 1; t < size; ++t)
        comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
    }
  }

  std::mt19937_64 rng(budget.seed);
  while (!found && !out_of_budget(budget.max_candidates)) {
    VertexSet s;
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
    while (s.size() < size) s.set(static_cast<VertexId>(rng() % static_cast<std::uint64_t>(g.vertex_count())));
    ++examined;
    if (is_mutual_visibility_set_fast(g, g.all() - s)) found = s;
  }
  if (!found) return std::nullopt;
  std::vector<SegmentId> segs;
  found->for_each([&](VertexId v) { segs.push_back(g.segment(v)); });
  return make_certificate(g, std::move(segs), Strategy::kFallbackSearch);
}

Certificate build_certificate(const DisjointnessGraph& g) {
  if (g.n_points() < 5)
    throw Error(ErrorCode::kInvalidArgument, "certificates need n >= 5 (connected graph)");
  const int m = convex_hull(g.points()).m();
  std::vector<std::string> diagnostics;
  std::optional<Certificate> c;
  if (m == 3)
    c = hull3_certificate(g, diagnostics);
  else if (m == 4)
    c = hull4_certificate(g, diagnostics);
  else if (m == 5)
    c = hull5_certificate(g, diagnostics);
  else if (m == 6)
    c = hull6_certificate(g, diagnostics);
  else if (m == 7)
    c = hull7_certificate(g, diagnostics);
  else if (m <= 9)
    c = hull89_certificate(g, diagnostics);
  else
    c = hull10plus_certificate(g, diagnostics);

  if (!c) {
    diagnostics.push_back("constructive route failed for hull size " + std::to_string(m) +
                          "; fallback search invoked");
    c = fallback_search(g);
    if (!c)
      throw Error(ErrorCode::kConstruction,
                  "no certificate: constructive route and fallback search both failed");
  }
  c->diagnostics.insert(c->diagnostics.begin(), diagnostics.begin(), diagnostics.end());
  return *c;
}

}  // namespace segvis
