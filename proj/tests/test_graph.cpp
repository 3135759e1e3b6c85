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

#include "oracles.hpp"
#include "segvis/error.hpp"
#include "segvis/graph.hpp"

using namespace segvis;

namespace {

void check_against_oracle(const PointSet& p) {
  const DisjointnessGraph g(p);
  const auto adj = oracle::adjacency(p);
  const auto dist = oracle::floyd_warshall(adj);
  REQUIRE(g.vertex_count() == static_cast<int>(adj.size()));
  int edges = 0;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = 0; b < g.vertex_count(); ++b) {
      CHECK(g.adjacent(a, b) == adj[a][b]);
      const int want = dist[a][b] >= oracle::kInf ? kUnreachable : dist[a][b];
      CHECK(g.distance(a, b) == want);
      if (a < b && adj[a][b]) ++edges;
    }
  CHECK(g.edge_count() == edges);
}

}  // namespace

TEST_CASE("vertices are the segments in lexicographic order") {
  const DisjointnessGraph g(gen_convex(6));
  CHECK(g.vertex_count() == 15);
  int v = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      CHECK(g.segment(v) == SegmentId(i, j));
      CHECK(g.index_of(SegmentId(j, i)) == v);
      ++v;
    }
  CHECK_THROWS_AS(g.index_of(SegmentId(2, 6)), Error);
}

TEST_CASE("convex pentagon by hand") {
  // Each hull edge misses the three segments on the other three points; each
  // diagonal crosses every other diagonal and misses only the opposite edge.
  const DisjointnessGraph g(gen_convex(5));
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 10);
  for (int i = 0; i < 5; ++i) {
    CHECK(g.degree(g.index_of(SegmentId(i, (i + 1) % 5))) == 3);
    CHECK(g.degree(g.index_of(SegmentId(i, (i + 2) % 5))) == 1);
    CHECK(g.adjacent(g.index_of(SegmentId(i, (i + 2) % 5)),
                     g.index_of(SegmentId((i + 3) % 5, (i + 4) % 5))));
  }
  CHECK(diameter(g) == 4);
  check_against_oracle(g.points());
}

TEST_CASE("small point sets") {
  const DisjointnessGraph tri(PointSet({{0, 0}, {5, 1}, {2, 7}}));
  CHECK(tri.edge_count() == 0);
  CHECK_FALSE(is_connected(tri));
  CHECK_FALSE(diameter(tri).has_value());
  const DisjointnessGraph quad(gen_convex(4));
  CHECK(quad.edge_count() == 2);
  CHECK_FALSE(is_connected(quad));
  CHECK_THROWS_AS(DisjointnessGraph(PointSet({{0, 0}, {1, 3}})), Error);
}

TEST_CASE("cacerola graph") {
  const DisjointnessGraph g(cacerola_points());
  CHECK(g.vertex_count() == 21);
  CHECK(is_connected(g));
  CHECK(diameter(g) == 3);
  check_against_oracle(g.points());
}

TEST_CASE("adjacency and distances agree with Floyd-Warshall") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    check_against_oracle(gen_random_general_position(n, seed, 1000));
  }
  check_against_oracle(gen_double_chain(3, 4));
}

TEST_CASE("hull edges have degree C(n-2, 2)") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 5 + static_cast<int>(seed % 8);
    const DisjointnessGraph g(gen_random_general_position(n, seed * 17, 1000));
    const HullData h = convex_hull(g.points());
    for (int i = 0; i < h.m(); ++i)
      CHECK(g.degree(g.index_of(SegmentId(h.at(i), h.at(i + 1)))) == choose2(n - 2));
  }
}

TEST_CASE("convex position: diameter two from nine points on") {
  for (int n = 9; n <= 14; ++n) CHECK(diameter(DisjointnessGraph(gen_convex(n))) == 2);
}

TEST_CASE("build is deterministic and symmetric") {
  const PointSet p = gen_random_general_position(11, 5, 1000);
  const DisjointnessGraph a(p), b = build_disjointness_graph(p);
  for (int v = 0; v < a.vertex_count(); ++v) {
    CHECK(a.neighbors(v) == b.neighbors(v));
    CHECK_FALSE(a.adjacent(v, v));
    a.neighbors(v).for_each([&](VertexId w) { CHECK(a.adjacent(w, v)); });
  }
  CHECK(distances_from(a, 3)[3] == 0);
}

TEST_CASE("capacity limit") {
  CHECK_NOTHROW(DisjointnessGraph(gen_convex(23)));
  CHECK_THROWS_AS(DisjointnessGraph(gen_convex(24)), Error);
}
