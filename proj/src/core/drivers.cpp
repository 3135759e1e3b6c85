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

#include "segvis/drivers.hpp"

#include <fmt/format.h>

#include <charconv>
#include <json.hpp>
#include <random>

#include "segvis/constructions.hpp"
#include "segvis/error.hpp"
#include "segvis/graph.hpp"
#include "segvis/io.hpp"
#include "segvis/solver.hpp"
#include "segvis/visibility.hpp"

namespace segvis {

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& spec) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::kInvalidArgument, "bad number '" + s + "' in generator spec " + spec);
  return v;
}

int parse_count(const std::string& s, const std::string& spec) {
  const std::uint64_t v = parse_u64(s, spec);
  if (v > 1000) throw Error(ErrorCode::kOutOfRange, "count too large in generator spec " + spec);
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) return out;
    pos = next + 1;
  }
}

std::string strategy_label(const Certificate& c) {
  std::string s = to_string(c.strategy);
  if (c.case_id) s += "(" + std::to_string(*c.case_id) + ")";
  return s;
}

VertexSet complement_of(const DisjointnessGraph& g, const std::vector<SegmentId>& blockers) {
  VertexSet w = g.all();
  for (const auto& s : blockers) w.reset(g.index_of(s));
  return w;
}

}  // namespace

PointSet generate_from_spec(const std::string& spec, std::uint64_t seed) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "cacerola" && args.empty()) return cacerola_points();
  if (kind == "convex" && !args.empty()) return gen_convex(parse_count(args, spec));
  if (kind == "double-chain") {
    const auto pq = split(args, ',');
    if (pq.size() == 2) return gen_double_chain(parse_count(pq[0], spec), parse_count(pq[1], spec));
  }
  if (kind == "random" && !args.empty()) {
    const auto parts = split(args, ':');
    if (parts.size() <= 2) {
      const int n = parse_count(parts[0], spec);
      const std::uint64_t s = parts.size() == 2 ? parse_u64(parts[1], spec) : seed;
      return gen_random_general_position(n, s, kRandomBound);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator spec '" + spec + "'");
}

std::vector<std::uint64_t> sweep_seeds(std::uint64_t base_seed, int n, int count) {
  std::seed_seq seq{static_cast<std::uint32_t>(base_seed), static_cast<std::uint32_t>(base_seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(count));
  for (auto& s : out) s = rng();
  return out;
}

bool diameter_in_range(int n, int diameter) {
  if (n == 5) return diameter >= 2 && diameter <= 4;
  if (n >= 6 && n <= 8) return diameter == 2 || diameter == 3;
  if (n >= 9) return diameter == 2;
  return false;
}

// ---------------------------------------------------------------------------

std::vector<ReproduceRow> reproduce(const ReproduceOptions& options) {
  std::vector<ReproduceRow> rows;
  auto row = [&](std::string name, const std::string& expected, const std::string& computed) {
    rows.push_back({std::move(name), expected, computed, expected == computed});
  };
  SolverOptions solver;
  solver.threads = options.threads;
  auto exact = [&](const DisjointnessGraph& g, const Certificate& c) {
    SolverOptions o = solver;
    o.witness_hint = complement_of(g, c.blockers);
    return mu_exact(g, c.mu_lower_bound, std::nullopt, o);
  };

  {
    const DisjointnessGraph g(cacerola_points());
    const Certificate c = build_certificate(g);
    const MuResult r = exact(g, c);
    row("cacerola vertices", "21", std::to_string(g.vertex_count()));
    row("cacerola diameter", "3", std::to_string(diameter(g).value_or(-1)));
    row("cacerola certificate", "Hull6Case(2) size 9", strategy_label(c) + " size " + std::to_string(c.size()));
    row("cacerola mu", "12", std::to_string(r.mu.value_or(-1)));
    row("cacerola refuted size", "13", std::to_string(r.refuted_size.value_or(-1)));
    row("cacerola refutation sets", "203490", std::to_string(r.refutation_sets_examined));
  }
  {
    const DisjointnessGraph g(gen_convex(10));
    const Certificate c = build_certificate(g);
    const MuResult r = exact(g, c);
    row("C10 certificate", "Hull10Plus size 5", strategy_label(c) + " size " + std::to_string(c.size()));
    row("C10 mu", "40", std::to_string(r.mu.value_or(-1)));
    row("C10 refutation sets", "148995", std::to_string(r.refutation_sets_examined));
  }
  {
    const DisjointnessGraph g(gen_double_chain(3, 6));
    // a_1 a_2 on the upper chain, b_1 b_2, b_3 b_4, b_5 b_6 on the lower one.
    const std::vector<SegmentId> s{{0, 1}, {3, 4}, {5, 6}, {7, 8}};
    const Certificate c = make_certificate(g, s, Strategy::kFallbackSearch);
    row("C3,6 blocker {a1a2,b1b2,b3b4,b5b6} verified", "true", c.verified ? "true" : "false");
    const MuResult r = mu_exact(g, std::nullopt, std::nullopt, solver);
    row("C3,6 mu", "32", std::to_string(r.mu.value_or(-1)));
    row("C3,6 refutation sets", "7140", std::to_string(r.refutation_sets_examined));
  }
  {
    const DisjointnessGraph g(gen_convex(5));
    bool regular = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) regular = regular && g.degree(v) == 3;
    row("C5 vertices/edges/3-regular", "10/15/true",
        fmt::format("{}/{}/{}", g.vertex_count(), g.edge_count(), regular ? "true" : "false"));
  }
  for (int n : {6, 7, 8, 12}) {
    const DisjointnessGraph g(gen_convex(n));
    const Certificate c = build_certificate(g);
    const char* expected = n == 6 ? "Hull6Case(1) size 9"
                         : n == 7 ? "Hull7Case(1) size 7"
                         : n == 8 ? "Hull89 size 8"
                                  : "Hull10Plus size 5";
    row(fmt::format("C{} certificate", n), expected,
        strategy_label(c) + " size " + std::to_string(c.size()));
  }
  row("C9 diameter", "2", std::to_string(diameter(DisjointnessGraph(gen_convex(9))).value_or(-1)));

  {
    SweepOptions so;
    so.count = options.sweep_count;
    so.seed = options.seed;
    const SweepStats st = sweep(so);
    row(fmt::format("sweep n=5..12 x{} diameter violations", so.count), "0",
        std::to_string(st.diameter_violations));
    row(fmt::format("sweep n=5..12 x{} certificate failures", so.count), "0",
        std::to_string(st.certificate_failures));
    row(fmt::format("sweep n=5..12 x{} fallback invocations", so.count), "0",
        std::to_string(st.fallback_invocations));
  }
  {
    int refuted = 0;
    const auto seeds = sweep_seeds(options.seed, 9, options.upper_bound_count);
    for (std::uint64_t s : seeds) {
      const DisjointnessGraph g(gen_random_general_position(9, s, kRandomBound));
      refuted += refute_size(g, choose2(9) - 3, solver) ? 1 : 0;
    }
    row(fmt::format("n=9 random x{}: size 33 refuted", options.upper_bound_count),
        std::to_string(options.upper_bound_count), std::to_string(refuted));
  }
  return rows;
}

bool all_pass(const std::vector<ReproduceRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ReproduceRow& r) { return r.pass; });
}

std::string reproduce_to_json(const std::vector<ReproduceRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o;
    o["name"] = r.name;
    o["expected"] = r.expected;
    o["computed"] = r.computed;
    o["pass"] = r.pass;
    arr.push_back(o);
  }
  nlohmann::json doc;
  doc["rows"] = arr;
  doc["all_pass"] = all_pass(rows);
  return doc.dump(2) + "\n";
}

std::string reproduce_to_text(const std::vector<ReproduceRow>& rows) {
  std::size_t w = 4;
  for (const auto& r : rows) w = std::max(w, r.name.size());
  std::string out = fmt::format("{:<{}}  {:<22}  {:<22}  {}\n", "check", w, "expected", "computed", "result");
  for (const auto& r : rows)
    out += fmt::format("{:<{}}  {:<22}  {:<22}  {}\n", r.name, w, r.expected, r.computed,
                       r.pass ? "PASS" : "FAIL");
  return out;
}

// ---------------------------------------------------------------------------

SweepStats sweep(const SweepOptions& options) {
  if (options.n_min < 5 || options.n_max < options.n_min || options.n_max > 23 || options.count < 0)
    throw Error(ErrorCode::kInvalidArgument, "sweep range must satisfy 5 <= n_min <= n_max <= 23");
  SweepStats st;
  for (int n = options.n_min; n <= options.n_max; ++n)
    for (std::uint64_t s : sweep_seeds(options.seed, n, options.count)) {
      const PointSet pts = gen_random_general_position(n, s, kRandomBound);
      const DisjointnessGraph g(pts);
      ++st.instances;
      auto fail = [&](const std::string& why) {
        st.failures.push_back({n, s, why, points_to_json(pts)});
      };
      const auto d = diameter(g);
      st.diameters[n][d.value_or(-1)]++;
      if (!d || !diameter_in_range(n, *d)) {
        ++st.diameter_violations;
        fail("diameter out of range");
      }
      try {
        const Certificate c = build_certificate(g);
        st.strategies[strategy_label(c)]++;
        st.max_blockers = std::max(st.max_blockers, c.size());
        if (c.strategy == Strategy::kFallbackSearch) {
          ++st.fallback_invocations;
          fail("fallback search invoked");
        }
        if (!c.verified || c.size() > 9) {
          ++st.certificate_failures;
          fail("certificate not verified or larger than 9");
        }
      } catch (const Error& e) {
        ++st.certificate_failures;
        fail(std::string("certificate error: ") + e.what());
      }
    }
  return st;
}

std::string sweep_to_json(const SweepStats& st) {
  nlohmann::json doc;
  doc["instances"] = st.instances;
  doc["diameter_violations"] = st.diameter_violations;
  doc["certificate_failures"] = st.certificate_failures;
  doc["fallback_invocations"] = st.fallback_invocations;
  doc["max_blockers"] = st.max_blockers;
  doc["strategies"] = st.strategies;
  nlohmann::json diam = nlohmann::json::object();
  for (const auto& [n, hist] : st.diameters) {
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [d, count] : hist) h[std::to_string(d)] = count;
    diam[std::to_string(n)] = h;
  }
  doc["diameters"] = diam;
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : st.failures) {
    nlohmann::json o;
    o["n"] = f.n;
    o["instance_seed"] = f.instance_seed;
    o["reason"] = f.reason;
    o["points"] = nlohmann::json::parse(f.points_json)["points"];
    fails.push_back(o);
  }
  doc["failures"] = fails;
  return doc.dump(2) + "\n";
}

}  // namespace segvis
