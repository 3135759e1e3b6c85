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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "segvis/constructions.hpp"
#include "segvis/error.hpp"
#include "segvis/visibility.hpp"

using namespace segvis;

namespace {

VertexSet random_subset(int nv, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  VertexSet s;
  for (int v = 0; v < nv; ++v)
    if (coin(rng)) s.set(v);
  return s;
}

std::vector<bool> as_mask(const VertexSet& s, int nv) {
  std::vector<bool> m(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) m[static_cast<std::size_t>(v)] = s.test(v);
  return m;
}

}  // namespace

TEST_CASE("pair verdicts agree with the enumeration oracle") {
  std::mt19937_64 rng(11);
  for (const PointSet& p : {cacerola_points(), gen_convex(5), gen_convex(6),
                            gen_random_general_position(6, 3, 1000),
                            gen_random_general_position(7, 4, 1000)}) {
    const DisjointnessGraph g(p);
    const auto adj = oracle::adjacency(p);
    const auto dist = oracle::floyd_warshall(adj);
    const int nv = g.vertex_count();
    for (int t = 0; t < 60; ++t) {
      const VertexSet u = random_subset(nv, 0.3 + 0.6 * (t % 3) / 2.0, rng);
      const auto mask = as_mask(u, nv);
      const auto members = u.to_vector();
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          const PairVerdict v = is_mutually_visible(g, u, members[x], members[y]);
          CHECK(v.visible == oracle::visible_by_enumeration(adj, dist, mask, members[x], members[y]));
        }
      const bool whole = oracle::is_mv_set_by_enumeration(adj, dist, mask);
      CHECK(is_mutual_visibility_set(g, u).ok == whole);
      CHECK(is_mutual_visibility_set_fast(g, u) == whole);
    }
  }
}

TEST_CASE("witness paths are shortest and avoid the set") {
  const DisjointnessGraph g(cacerola_points());
  std::mt19937_64 rng(5);
  int seen = 0;
  for (int t = 0; t < 200; ++t) {
    const VertexSet u = random_subset(g.vertex_count(), 0.4, rng);
    const auto members = u.to_vector();
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const PairVerdict v = is_mutually_visible(g, u, members[x], members[y]);
        if (!v.visible || v.distance == 1) {
          CHECK_FALSE(v.witness.has_value());
          continue;
        }
        REQUIRE(v.witness.has_value());
        const auto& w = *v.witness;
        CHECK(static_cast<int>(w.size()) == v.distance + 1);
        CHECK(w.front() == v.a);
        CHECK(w.back() == v.b);
        for (std::size_t k = 0; k + 1 < w.size(); ++k) CHECK(g.adjacent(w[k], w[k + 1]));
        for (std::size_t k = 1; k + 1 < w.size(); ++k) CHECK_FALSE(u.test(w[k]));
        CHECK(static_cast<int>(*v.condition) == v.distance);
        ++seen;
      }
  }
  CHECK(seen > 0);
}

TEST_CASE("failing pair is the first in lexicographic order") {
  const DisjointnessGraph g(cacerola_points());
  const VisibilityCheck c = is_mutual_visibility_set(g, g.all());
  REQUIRE_FALSE(c.ok);
  REQUIRE(c.failing.has_value());
  const auto members = g.all().to_vector();
  bool earlier_fail = false;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      if (a == c.failing->a && b == c.failing->b) goto done;
      earlier_fail |= !is_mutually_visible(g, g.all(), a, b).visible;
    }
done:
  CHECK_FALSE(earlier_fail);
}

TEST_CASE("argument validation") {
  const DisjointnessGraph g(gen_convex(5));
  const VertexSet u{0, 1};
  CHECK_THROWS_AS(is_mutually_visible(g, u, 0, 0), Error);
  CHECK_THROWS_AS(is_mutually_visible(g, u, 0, 2), Error);
  CHECK_THROWS_AS(classify_pair(g, u, 0, 2), Error);
  CHECK(is_mutual_visibility_set(g, VertexSet{}).ok);
  CHECK(is_mutual_visibility_set(g, VertexSet{4}).ok);
}

TEST_CASE("downward closure on verified sets") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 5 + static_cast<int>(seed % 5);
    const DisjointnessGraph g(gen_random_general_position(n, seed, 1000));
    const Certificate c = build_certificate(g);
    REQUIRE(c.verified);
    VertexSet u = g.all();
    for (const auto& s : c.blockers) u.reset(g.index_of(s));
    for (int t = 0; t < 10; ++t) {
      const VertexSet sub = u & random_subset(g.vertex_count(), 0.7, rng);
      CHECK(is_mutual_visibility_set(g, sub).ok);
    }
  }
}

TEST_CASE("blocker complement verifies exactly when every S-pair is classified") {
  std::mt19937_64 rng(23);
  int agreed_true = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 5 + static_cast<int>(seed % 3);
    const DisjointnessGraph g(gen_random_general_position(n, seed * 7, 1000));
    const int nv = g.vertex_count();
    for (int t = 0; t < 40; ++t) {
      VertexSet s = random_subset(nv, 0.15 + 0.5 * (t % 4) / 3.0, rng);
      if (t % 10 == 0) {
        s = VertexSet{};
        for (const auto& b : build_certificate(g).blockers) s.set(g.index_of(b));
      }
      const VertexSet u = g.all() - s;
      bool all_classified = true;
      const auto members = u.to_vector();
      for (std::size_t x = 0; x < members.size() && all_classified; ++x)
        for (std::size_t y = x + 1; y < members.size() && all_classified; ++y)
          all_classified = classify_pair(g, s, members[x], members[y]).has_value();
      const bool verified = is_mutual_visibility_set(g, u).ok;
      CHECK(verified == all_classified);
      agreed_true += verified ? 1 : 0;
    }
  }
  CHECK(agreed_true > 0);
}

TEST_CASE("classification on the convex hexagon blocker") {
  // Hull-edge blocker set of the hexagon: every pair at distance 3 must go
  // through two blockers, one disjoint from each end.
  const DisjointnessGraph g(gen_convex(6));
  const Certificate c = build_certificate(g);
  REQUIRE(c.verified);
  VertexSet s;
  for (const auto& b : c.blockers) s.set(g.index_of(b));
  const VertexId a = g.index_of(SegmentId(0, 2)), b = g.index_of(SegmentId(0, 4));
  if (!s.test(a) && !s.test(b)) {
    CHECK(g.distance(a, b) == 3);
    CHECK(classify_pair(g, s, a, b) == Condition::kDist3);
  }
  CHECK(to_string(Condition::kDist3).size() > 0);
}
