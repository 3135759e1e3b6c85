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

// Generator specs, the golden reproduction table and random sweeps.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "segvis/geometry.hpp"

namespace segvis {

// Coordinate range used by the random generator in specs and sweeps.
inline constexpr std::int64_t kRandomBound = 1000;

// "convex:N", "double-chain:P,Q", "random:N[:SEED]" or "cacerola". A random
// spec without its own seed uses `seed`.
PointSet generate_from_spec(const std::string& spec, std::uint64_t seed);

// Instance seeds for a sweep, all drawn from one base seed.
std::vector<std::uint64_t> sweep_seeds(std::uint64_t base_seed, int n, int count);

struct ReproduceRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReproduceOptions {
  int threads = 1;
  std::uint64_t seed = 0;
  int sweep_count = 200;      // random sets per n for the diameter/certificate rows
  int upper_bound_count = 20;  // random n = 9 sets for the upper-bound row
};

std::vector<ReproduceRow> reproduce(const ReproduceOptions& options = {});
bool all_pass(const std::vector<ReproduceRow>& rows);
// No timing fields: identical options give identical bytes.
std::string reproduce_to_json(const std::vector<ReproduceRow>& rows);
std::string reproduce_to_text(const std::vector<ReproduceRow>& rows);

struct SweepOptions {
  int n_min = 5;
  int n_max = 12;
  int count = 200;
  std::uint64_t seed = 0;
};

struct SweepFailure {
  int n = 0;
  std::uint64_t instance_seed = 0;
  std::string reason;
  std::string points_json;  // replayable input
};

struct SweepStats {
  int instances = 0;
  int diameter_violations = 0;
  int certificate_failures = 0;
  int fallback_invocations = 0;
  int max_blockers = 0;
  std::map<std::string, int> strategies;          // "Hull6Case(3)" -> count
  std::map<int, std::map<int, int>> diameters;     // n -> diameter -> count
  std::vector<SweepFailure> failures;
};

SweepStats sweep(const SweepOptions& options);
std::string sweep_to_json(const SweepStats& stats);

// Allowed diameters of D(P) for n >= 5: {2,3,4}, {2,3} for 6..8, {2} for 9+.
bool diameter_in_range(int n, int diameter);

}  // namespace segvis
