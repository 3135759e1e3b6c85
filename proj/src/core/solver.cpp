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

#include "segvis/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "segvis/error.hpp"
#include "segvis/visibility.hpp"

namespace segvis {

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kChunk = 2048;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > (std::uint64_t{1} << 62)) throw Error(ErrorCode::kOutOfRange, "subset count too large");
  }
  return static_cast<std::uint64_t>(r);
}

// Lexicographic unranking of s-subsets of {0..v-1}.
void unrank(std::uint64_t rank, int v, int s, std::vector<int>& comb) {
  comb.resize(static_cast<std::size_t>(s));
  int x = 0;
  for (int i = 0; i < s; ++i) {
    for (;;) {
      const std::uint64_t c = binomial(v - 1 - x, s - 1 - i);
      if (rank < c) break;
      rank -= c;
      ++x;
    }
    comb[static_cast<std::size_t>(i)] = x++;
  }
}

bool next_combination(std::vector<int>& comb, int v) {
  const int s = static_cast<int>(comb.size());
  int k = s - 1;
  while (k >= 0 && comb[static_cast<std::size_t>(k)] == v - s + k) --k;
  if (k < 0) return false;
  ++comb[static_cast<std::size_t>(k)];
  for (int t = k + 1; t < s; ++t)
    comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
  return true;
}

struct Deadline {
  std::optional<Clock::time_point> at;
  bool passed() const { return at && Clock::now() >= *at; }
};

SizeSearch search_impl(const DisjointnessGraph& g, int k, int threads, const Deadline& deadline) {
  const int v = g.vertex_count();
  if (k <= 0 || k > v) throw Error(ErrorCode::kInvalidArgument, "subset size out of range");
  const int s = v - k;
  const std::uint64_t total = binomial(v, s);
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  const VertexSet all = g.all();

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best{kNone};
  std::atomic<bool> timed_out{false};

  auto worker = [&]() {
    std::vector<int> comb;
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunks || timed_out.load()) return;
      const std::uint64_t start = c * kChunk;
      if (start >= best.load()) return;
      const std::uint64_t stop = std::min(total, start + kChunk);
      unrank(start, v, s, comb);
      for (std::uint64_t r = start; r < stop; ++r) {
        if ((r & 255) == 0 && deadline.passed()) {
          timed_out = true;
          return;
        }
        VertexSet blockers;
        for (int x : comb) blockers.set(x);
        if (is_mutual_visibility_set_fast(g, all - blockers)) {
          std::uint64_t cur = best.load();
          while (r < cur && !best.compare_exchange_weak(cur, r)) {
          }
          break;
        }
        next_combination(comb, v);
      }
    }
  };

  const int t = std::max(1, threads);
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SizeSearch out;
  const std::uint64_t b = best.load();
  if (b != kNone) {
    // Chunks are claimed in order, so every rank below b was examined unless
    // the deadline cut a worker short.
    out.found = true;
    out.sets_examined = b + 1;
    std::vector<int> comb;
    unrank(b, v, s, comb);
    VertexSet blockers;
    for (int x : comb) blockers.set(x);
    out.witness = all - blockers;
  } else {
    out.sets_examined = total;
  }
  out.timed_out = timed_out.load();
  if (out.timed_out) out.found = false;
  return out;
}

Deadline deadline_from(const SolverOptions& options, Clock::time_point start) {
  Deadline d;
  if (options.time_budget) d.at = start + *options.time_budget;
  return d;
}

}  // namespace

SizeSearch search_size(const DisjointnessGraph& g, int k, const SolverOptions& options) {
  return search_impl(g, k, options.threads, deadline_from(options, Clock::now()));
}

bool refute_size(const DisjointnessGraph& g, int k, const SolverOptions& options) {
  const SizeSearch r = search_size(g, k, options);
  if (r.timed_out) throw Error(ErrorCode::kTimeout, "refutation ran out of time");
  return !r.found;
}

int default_upper_hint(int n_points) {
  return choose2(n_points) - (n_points >= 9 ? 4 : 1);
}

MuResult mu_exact(const DisjointnessGraph& g, std::optional<int> lower_hint,
                  std::optional<int> upper_hint, const SolverOptions& options) {
  const auto t0 = Clock::now();
  if (!is_connected(g))
    throw Error(ErrorCode::kDisconnected, "exact search needs a connected graph (n >= 5)");
  const int v = g.vertex_count();
  int upper = std::clamp(upper_hint.value_or(default_upper_hint(g.n_points())), 1, v);
  const int floor_k = std::clamp(lower_hint.value_or(1), 1, upper);
  const Deadline deadline = deadline_from(options, t0);

  std::optional<VertexSet> hint;
  if (options.witness_hint && options.witness_hint->size() == floor_k &&
      is_mutual_visibility_set_fast(g, *options.witness_hint))
    hint = options.witness_hint;

  MuResult res;
  res.mu_lower = 1;
  res.witness = VertexSet{0};
  res.mu_upper = upper;
  if (hint) {
    res.mu_lower = floor_k;
    res.witness = *hint;
  }
  auto finish = [&]() {
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return res;
  };

  // Size upper + 1 is refuted explicitly so the reported refutation never
  // rests on the hint alone.
  int k = upper + 1 <= v ? upper + 1 : upper;
  for (; k >= floor_k; --k) {
    if (k == floor_k && hint) {
      res.mu = k;
      res.mu_upper = k;
      return finish();
    }
    const SizeSearch s = search_impl(g, k, options.threads, deadline);
    res.total_sets_examined += s.sets_examined;
    if (s.timed_out) {
      res.timed_out = true;
      return finish();
    }
    if (s.found) {
      if (k == upper + 1) {
        // The hint was not an upper bound; restart above it.
        upper = v;
        res.mu_upper = v;
        k = v + 1;
        continue;
      }
      res.mu = k;
      res.mu_lower = k;
      res.mu_upper = k;
      res.witness = s.witness;
      return finish();
    }
    res.refuted_size = k;
    res.refutation_sets_examined = s.sets_examined;
    res.mu_upper = k - 1;
  }
  // Every size down to the floor was refuted without a usable hint; the
  // floor itself was wrong.
  MuResult rest = mu_exact(g, std::nullopt, floor_k - 1, options);
  rest.total_sets_examined += res.total_sets_examined;
  return rest;
}

BoundsReport check_bounds_report(const PointSet& points, const SolverOptions& options,
                                 int exact_vertex_limit) {
  BoundsReport rep;
  rep.n = points.size();
  rep.vertices = choose2(rep.n);
  const DisjointnessGraph g(points);
  rep.certificate = build_certificate(g);
  rep.theorem_lower = rep.vertices - 9;
  if (rep.n >= 9) rep.theorem_upper = rep.vertices - 4;
  const Certificate& c = rep.certificate;
  if (!c.verified) rep.violations.push_back("certificate failed verification");
  if (c.size() > 9) rep.violations.push_back("certificate has more than 9 blockers");
  if (rep.vertices <= exact_vertex_limit) {
    VertexSet w = g.all();
    for (const auto& s : c.blockers) w.reset(g.index_of(s));
    SolverOptions opt = options;
    opt.witness_hint = w;
    rep.exact = mu_exact(g, c.mu_lower_bound, std::nullopt, opt);
    if (rep.exact->mu) {
      const int mu = *rep.exact->mu;
      if (mu < c.mu_lower_bound) rep.violations.push_back("exact value below certificate bound");
      if (rep.theorem_upper && mu > *rep.theorem_upper)
        rep.violations.push_back("exact value above C(n,2) - 4");
    }
  }
  return rep;
}

}  // namespace segvis
