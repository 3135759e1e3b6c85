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
#include "segvis/solver.hpp"
#include "segvis/visibility.hpp"

using namespace segvis;

namespace {

// Largest mutual-visibility set by scanning all 2^|V| subsets with the
// enumeration oracle.
int brute_force_mu(const PointSet& p) {
  const auto adj = oracle::adjacency(p);
  const auto dist = oracle::floyd_warshall(adj);
  const int nv = static_cast<int>(adj.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << nv); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    std::vector<bool> in(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) in[static_cast<std::size_t>(v)] = (mask >> v) & 1U;
    if (oracle::is_mv_set_by_enumeration(adj, dist, in)) best = size;
  }
  return best;
}

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST_CASE("exact value matches brute force on small sets") {
  std::vector<PointSet> sets{gen_convex(5), gen_convex(6)};
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    sets.push_back(gen_random_general_position(5 + static_cast<int>(seed % 2), seed, 1000));
  for (const PointSet& p : sets) {
    const DisjointnessGraph g(p);
    const MuResult r = mu_exact(g);
    REQUIRE(r.mu.has_value());
    CHECK(*r.mu == brute_force_mu(p));
    CHECK(r.witness.size() == *r.mu);
    CHECK(is_mutual_visibility_set(g, r.witness).ok);
    CHECK(r.mu_lower == *r.mu);
    CHECK(r.mu_upper == *r.mu);
  }
}

TEST_CASE("cacerola: twelve, with every 13-subset refuted") {
  const DisjointnessGraph g(cacerola_points());
  const MuResult r = mu_exact(g);
  REQUIRE(r.mu.has_value());
  CHECK(*r.mu == 12);
  CHECK(r.refuted_size == 13);
  CHECK(r.refutation_sets_examined == 203490);
  CHECK(r.refutation_sets_examined == binom(21, 13));
  CHECK(r.total_sets_examined >= r.refutation_sets_examined);
  CHECK_FALSE(r.timed_out);
}

TEST_CASE("search_size counts complements in serial order") {
  const DisjointnessGraph g(cacerola_points());
  const SizeSearch at13 = search_size(g, 13);
  CHECK_FALSE(at13.found);
  CHECK(at13.sets_examined == binom(21, 8));
  const SizeSearch at12 = search_size(g, 12);
  REQUIRE(at12.found);
  CHECK(at12.witness.size() == 12);
  CHECK(is_mutual_visibility_set(g, at12.witness).ok);
  CHECK(at12.sets_examined >= 1);
  CHECK(at12.sets_examined <= binom(21, 9));
  CHECK(refute_size(g, 13));
  CHECK_FALSE(refute_size(g, 12));
  CHECK_FALSE(refute_size(g, 1));
  CHECK_THROWS_AS(search_size(g, 0), Error);
  CHECK_THROWS_AS(search_size(g, 22), Error);
}

TEST_CASE("parallel search gives the serial answer") {
  for (const PointSet& p : {cacerola_points(), gen_random_general_position(7, 3, 1000),
                            gen_random_general_position(8, 9, 1000)}) {
    const DisjointnessGraph g(p);
    SolverOptions par;
    par.threads = 4;
    const MuResult a = mu_exact(g);
    const MuResult b = mu_exact(g, std::nullopt, std::nullopt, par);
    CHECK(a.mu == b.mu);
    CHECK(a.witness == b.witness);
    CHECK(a.refutation_sets_examined == b.refutation_sets_examined);
    CHECK(a.total_sets_examined == b.total_sets_examined);
  }
}

TEST_CASE("hints do not change the answer") {
  const DisjointnessGraph g(gen_random_general_position(7, 21, 1000));
  const MuResult plain = mu_exact(g);
  const Certificate c = build_certificate(g);
  SolverOptions o;
  VertexSet w = g.all();
  for (const auto& s : c.blockers) w.reset(g.index_of(s));
  o.witness_hint = w;
  const MuResult hinted = mu_exact(g, c.mu_lower_bound, std::nullopt, o);
  CHECK(plain.mu == hinted.mu);
  // A too-low upper hint is detected and the search restarts.
  const MuResult low = mu_exact(g, std::nullopt, *plain.mu - 2);
  CHECK(low.mu == plain.mu);
}

TEST_CASE("time budget brackets the answer") {
  const DisjointnessGraph g(gen_random_general_position(11, 5, 1000));
  SolverOptions o;
  o.time_budget = std::chrono::milliseconds(1);
  const MuResult r = mu_exact(g, std::nullopt, std::nullopt, o);
  CHECK(r.timed_out);
  CHECK_FALSE(r.mu.has_value());
  CHECK(r.mu_lower <= r.mu_upper);
  CHECK(r.mu_upper <= choose2(11) - 4);
  CHECK(r.witness.size() == r.mu_lower);
  CHECK(is_mutual_visibility_set(g, r.witness).ok);
  CHECK_THROWS_AS(refute_size(g, 52, o), Error);
}

TEST_CASE("upper bound from nine points on") {
  CHECK(default_upper_hint(9) == 32);
  CHECK(default_upper_hint(12) == 62);
  CHECK(default_upper_hint(7) == 20);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const DisjointnessGraph g(gen_random_general_position(9, seed, 1000));
    CHECK(refute_size(g, choose2(9) - 3));
  }
}

TEST_CASE("bounds report") {
  const BoundsReport r = check_bounds_report(cacerola_points());
  CHECK(r.consistent());
  CHECK(r.n == 7);
  CHECK(r.vertices == 21);
  CHECK(r.theorem_lower == 12);
  CHECK_FALSE(r.theorem_upper.has_value());
  REQUIRE(r.exact.has_value());
  CHECK(r.exact->mu == 12);
  const BoundsReport big = check_bounds_report(gen_convex(12), {}, 45);
  CHECK(big.consistent());
  CHECK_FALSE(big.exact.has_value());
  CHECK(big.theorem_upper == choose2(12) - 4);
}

TEST_CASE("disconnected graphs are rejected") {
  CHECK_THROWS_AS(mu_exact(DisjointnessGraph(gen_convex(4))), Error);
}
