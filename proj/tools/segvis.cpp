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

// segvis: command-line front end over the C API.
//
// Exit codes: 0 success, 1 other failure, 2 validation error, 3 reproduction
// mismatch, 4 timeout with bracketed bounds.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <string>

#include "segvis/segvis.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitTimeout = 4;

int exit_code_for(segvis_status s) {
  switch (s) {
    case SEGVIS_OK: return kExitOk;
    case SEGVIS_INVALID_ARGUMENT:
    case SEGVIS_PARSE_ERROR:
    case SEGVIS_NOT_GENERAL_POSITION:
    case SEGVIS_OUT_OF_RANGE:
    case SEGVIS_DISCONNECTED: return kExitValidation;
    case SEGVIS_MISMATCH: return kExitMismatch;
    case SEGVIS_TIMEOUT: return kExitTimeout;
    default: return kExitOther;
  }
}

struct Failure {
  segvis_status status;
};

void check(segvis_status s) {
  if (s == SEGVIS_OK) return;
  std::cerr << "segvis: " << segvis_status_name(s) << ": " << segvis_last_error() << "\n";
  throw Failure{s};
}

struct CString {
  char* p = nullptr;
  ~CString() { segvis_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using PointsPtr = std::unique_ptr<segvis_pointset, decltype(&segvis_pointset_free)>;
using GraphPtr = std::unique_ptr<segvis_graph, decltype(&segvis_graph_free)>;

struct Config {
  std::string points;
  std::string gen;
  uint64_t seed = 0;
  int threads = 1;
  double time_budget = 0;
  std::string format = "json";
  std::string out;
  std::string svg;
};

PointsPtr load_input(const Config& cfg) {
  segvis_pointset* ps = nullptr;
  if (!cfg.points.empty() == !cfg.gen.empty()) {
    std::cerr << "segvis: give exactly one of --points or --gen\n";
    throw Failure{SEGVIS_INVALID_ARGUMENT};
  }
  if (cfg.points == "cacerola" || cfg.gen == "cacerola")
    check(segvis_pointset_generate("cacerola", cfg.seed, &ps));
  else if (!cfg.gen.empty())
    check(segvis_pointset_generate(cfg.gen.c_str(), cfg.seed, &ps));
  else
    check(segvis_pointset_load(cfg.points.c_str(), &ps));
  return PointsPtr(ps, segvis_pointset_free);
}

GraphPtr build_graph(const segvis_pointset* ps) {
  segvis_graph* g = nullptr;
  check(segvis_graph_build(ps, &g));
  return GraphPtr(g, segvis_graph_free);
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    std::cerr << "segvis: cannot write " << cfg.out << "\n";
    throw Failure{SEGVIS_INVALID_ARGUMENT};
  }
  f << text;
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (cfg.format == a) return;
  std::cerr << "segvis: format '" << cfg.format << "' not supported by this command\n";
  throw Failure{SEGVIS_INVALID_ARGUMENT};
}

int cmd_build(const Config& cfg) {
  require_format(cfg, {"json", "dot", "text"});
  auto ps = load_input(cfg);
  auto g = build_graph(ps.get());
  const int diam = segvis_graph_diameter(g.get());
  const std::string summary =
      "vertices " + std::to_string(segvis_graph_vertex_count(g.get())) + "\nedges " +
      std::to_string(segvis_graph_edge_count(g.get())) + "\ndiameter " +
      (diam < 0 ? std::string("infinite") : std::to_string(diam)) + "\nconnected " +
      (segvis_graph_is_connected(g.get()) ? "true" : "false") + "\n";
  if (cfg.format == "text") {
    emit(cfg, summary);
    return kExitOk;
  }
  CString s;
  check(segvis_graph_export(g.get(), cfg.format == "dot" ? SEGVIS_GRAPH_DOT : SEGVIS_GRAPH_JSON,
                            &s.p));
  emit(cfg, s.str());
  std::cerr << summary;
  return kExitOk;
}

int cmd_certificate(const Config& cfg) {
  require_format(cfg, {"json", "svg", "text"});
  auto ps = load_input(cfg);
  auto g = build_graph(ps.get());
  CString json, svg;
  const bool want_svg = cfg.format == "svg" || !cfg.svg.empty();
  check(segvis_certificate(g.get(), &json.p, want_svg ? &svg.p : nullptr));
  if (!cfg.svg.empty()) {
    std::ofstream f(cfg.svg, std::ios::binary);
    f << svg.str();
  }
  if (cfg.format == "svg") {
    emit(cfg, svg.str());
  } else if (cfg.format == "text") {
    const auto doc = nlohmann::json::parse(json.str());
    std::string label = doc["strategy"].get<std::string>();
    if (!doc["case"].is_null()) label += "(" + std::to_string(doc["case"].get<int>()) + ")";
    std::string segs;
    for (const auto& s : doc["S"])
      segs += " " + std::to_string(s[0].get<int>()) + "-" + std::to_string(s[1].get<int>());
    emit(cfg, "strategy " + label + "\nsize " + std::to_string(doc["size"].get<int>()) +
                  "\nmu_lower_bound " + std::to_string(doc["mu_lower_bound"].get<int>()) +
                  "\nverified " + (doc["verified"].get<bool>() ? "true" : "false") + "\nS" + segs +
                  "\n");
  } else {
    emit(cfg, json.str());
  }
  return kExitOk;
}

int cmd_mu(const Config& cfg) {
  require_format(cfg, {"json", "text"});
  auto ps = load_input(cfg);
  auto g = build_graph(ps.get());
  if (segvis_graph_vertex_count(g.get()) > 45)
    std::cerr << "segvis: warning: " << segvis_graph_vertex_count(g.get())
              << " vertices is beyond desk scale; the search may not finish\n";
  segvis_mu_options opt{cfg.threads, cfg.time_budget, 1, 1};
  CString out;
  const segvis_status st = segvis_mu(g.get(), &opt, &out.p);
  if (st != SEGVIS_OK && st != SEGVIS_TIMEOUT) check(st);
  if (cfg.format == "text") {
    const auto doc = nlohmann::json::parse(out.str());
    std::string line = doc["mu"].is_null()
                           ? "mu in [" + std::to_string(doc["mu_lower"].get<int>()) + ", " +
                                 std::to_string(doc["mu_upper"].get<int>()) + "] (timeout)\n"
                           : "mu " + std::to_string(doc["mu"].get<int>()) + "\n";
    if (!doc["refuted"].is_null())
      line += "refuted " + std::to_string(doc["refuted"].get<int>()) + " over " +
              std::to_string(doc["sets_examined"].get<long long>()) + " sets\n";
    emit(cfg, line);
  } else {
    emit(cfg, out.str());
  }
  if (st == SEGVIS_TIMEOUT) std::cerr << "segvis: " << segvis_last_error() << "\n";
  return exit_code_for(st);
}

int cmd_reproduce(const Config& cfg) {
  require_format(cfg, {"json", "text"});
  CString out;
  const segvis_status st = segvis_reproduce(cfg.threads, cfg.seed, cfg.format == "text", &out.p);
  if (st != SEGVIS_OK && st != SEGVIS_MISMATCH) check(st);
  emit(cfg, out.str());
  if (st == SEGVIS_MISMATCH) std::cerr << "segvis: " << segvis_last_error() << "\n";
  return exit_code_for(st);
}

int cmd_sweep(const Config& cfg, int n_min, int n_max, int count) {
  require_format(cfg, {"json"});
  CString out;
  int violations = 0;
  check(segvis_sweep(n_min, n_max, count, cfg.seed, &out.p, &violations));
  emit(cfg, out.str());
  if (violations > 0) {
    std::cerr << "segvis: " << violations << " invariant violations\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjointness graphs of segments: mutual-visibility toolkit"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("SEGVIS_THREADS")) {
    try {
      cfg.threads = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "segvis: ignoring invalid SEGVIS_THREADS\n";
    }
  }

  auto add_common = [&](CLI::App* sub, bool input) {
    if (input) {
      auto* p = sub->add_option("--points", cfg.points, "point-set file (JSON or CSV) or 'cacerola'");
      auto* g = sub->add_option("--gen", cfg.gen,
                                "generator: convex:N, double-chain:P,Q, random:N[:SEED], cacerola");
      p->excludes(g);
    }
    sub->add_option("--seed", cfg.seed, "seed for all randomness");
    sub->add_option("--threads", cfg.threads, "worker threads (default $SEGVIS_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--time-budget", cfg.time_budget, "seconds before returning bracketed bounds")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "json|dot|svg|text");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };

  auto* build = app.add_subcommand("build", "build D(P) and export it");
  add_common(build, true);
  auto* cert = app.add_subcommand("certificate", "constructive blocker-set certificate");
  add_common(cert, true);
  cert->add_option("--svg", cfg.svg, "also write an SVG overlay here");
  auto* mu = app.add_subcommand("mu", "exact mutual-visibility number");
  add_common(mu, true);
  auto* repro = app.add_subcommand("reproduce", "run the golden table");
  add_common(repro, false);
  int n_min = 5, n_max = 12, count = 200;
  auto* sw = app.add_subcommand("sweep", "random-instance invariant sweep");
  add_common(sw, false);
  sw->add_option("--n-min", n_min, "smallest n");
  sw->add_option("--n-max", n_max, "largest n");
  sw->add_option("--count", count, "instances per n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*build) return cmd_build(cfg);
    if (*cert) return cmd_certificate(cfg);
    if (*mu) return cmd_mu(cfg);
    if (*repro) return cmd_reproduce(cfg);
    if (*sw) return cmd_sweep(cfg, n_min, n_max, count);
  } catch (const Failure& f) {
    return exit_code_for(f.status);
  }
  return kExitOther;
}
