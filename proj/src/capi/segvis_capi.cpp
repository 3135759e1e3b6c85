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

#include "segvis/segvis.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "segvis/constructions.hpp"
#include "segvis/drivers.hpp"
#include "segvis/error.hpp"
#include "segvis/graph.hpp"
#include "segvis/io.hpp"
#include "segvis/solver.hpp"
#include "segvis/visibility.hpp"

struct segvis_pointset {
  segvis::PointSet points;
};

struct segvis_graph {
  segvis::DisjointnessGraph graph;
};

namespace {

thread_local std::string g_last_error;

segvis_status fail(segvis_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
segvis_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const segvis::Error& e) {
    return fail(static_cast<segvis_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SEGVIS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SEGVIS_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

#define SEGVIS_REQUIRE(cond, what) \
  if (!(cond)) return fail(SEGVIS_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* segvis_version(void) { return "1.0.0"; }

const char* segvis_last_error(void) { return g_last_error.c_str(); }

const char* segvis_status_name(segvis_status status) {
  switch (status) {
    case SEGVIS_OK: return "ok";
    case SEGVIS_INVALID_ARGUMENT: return "invalid argument";
    case SEGVIS_PARSE_ERROR: return "parse error";
    case SEGVIS_NOT_GENERAL_POSITION: return "not in general position";
    case SEGVIS_OUT_OF_RANGE: return "out of range";
    case SEGVIS_DISCONNECTED: return "disconnected graph";
    case SEGVIS_CONSTRUCTION_FAILED: return "construction failed";
    case SEGVIS_TIMEOUT: return "timeout";
    case SEGVIS_MISMATCH: return "mismatch";
    case SEGVIS_INTERNAL: return "internal error";
  }
  return "unknown";
}

void segvis_string_free(char* s) { std::free(s); }

segvis_status segvis_pointset_create(const int64_t* xy, size_t n, segvis_pointset** out) {
  return guarded([&] {
    SEGVIS_REQUIRE(out && (xy || n == 0), "null argument");
    std::vector<segvis::Point> pts(n);
    for (size_t k = 0; k < n; ++k) pts[k] = {xy[2 * k], xy[2 * k + 1]};
    *out = new segvis_pointset{segvis::PointSet(std::move(pts))};
    return SEGVIS_OK;
  });
}

segvis_status segvis_pointset_load(const char* path, segvis_pointset** out) {
  return guarded([&] {
    SEGVIS_REQUIRE(path && out, "null argument");
    *out = new segvis_pointset{segvis::load_points(path)};
    return SEGVIS_OK;
  });
}

segvis_status segvis_pointset_generate(const char* spec, uint64_t seed, segvis_pointset** out) {
  return guarded([&] {
    SEGVIS_REQUIRE(spec && out, "null argument");
    *out = new segvis_pointset{segvis::generate_from_spec(spec, seed)};
    return SEGVIS_OK;
  });
}

segvis_status segvis_pointset_save(const segvis_pointset* ps, const char* path) {
  return guarded([&] {
    SEGVIS_REQUIRE(ps && path, "null argument");
    segvis::save_points(ps->points, path);
    return SEGVIS_OK;
  });
}

segvis_status segvis_pointset_to_json(const segvis_pointset* ps, char** out) {
  return guarded([&] {
    SEGVIS_REQUIRE(ps && out, "null argument");
    *out = dup(segvis::points_to_json(ps->points));
    return SEGVIS_OK;
  });
}

size_t segvis_pointset_size(const segvis_pointset* ps) {
  return ps ? static_cast<size_t>(ps->points.size()) : 0;
}

segvis_status segvis_pointset_get(const segvis_pointset* ps, size_t i, int64_t* x, int64_t* y) {
  return guarded([&] {
    SEGVIS_REQUIRE(ps && x && y, "null argument");
    if (i >= static_cast<size_t>(ps->points.size()))
      return fail(SEGVIS_OUT_OF_RANGE, "point index out of range");
    *x = ps->points[static_cast<int>(i)].x;
    *y = ps->points[static_cast<int>(i)].y;
    return SEGVIS_OK;
  });
}

void segvis_pointset_free(segvis_pointset* ps) { delete ps; }

segvis_status segvis_graph_build(const segvis_pointset* ps, segvis_graph** out) {
  return guarded([&] {
    SEGVIS_REQUIRE(ps && out, "null argument");
    *out = new segvis_graph{segvis::DisjointnessGraph(ps->points)};
    return SEGVIS_OK;
  });
}

void segvis_graph_free(segvis_graph* g) { delete g; }

int segvis_graph_vertex_count(const segvis_graph* g) { return g ? g->graph.vertex_count() : 0; }

int segvis_graph_edge_count(const segvis_graph* g) { return g ? g->graph.edge_count() : 0; }

int segvis_graph_is_connected(const segvis_graph* g) {
  return g && segvis::is_connected(g->graph) ? 1 : 0;
}

int segvis_graph_diameter(const segvis_graph* g) {
  if (!g) return -1;
  return segvis::diameter(g->graph).value_or(-1);
}

segvis_status segvis_graph_vertex(const segvis_graph* g, int v, int* i, int* j) {
  return guarded([&] {
    SEGVIS_REQUIRE(g && i && j, "null argument");
    if (v < 0 || v >= g->graph.vertex_count())
      return fail(SEGVIS_OUT_OF_RANGE, "vertex index out of range");
    *i = g->graph.segment(v).i;
    *j = g->graph.segment(v).j;
    return SEGVIS_OK;
  });
}

segvis_status segvis_graph_export(const segvis_graph* g, segvis_graph_format format, char** out) {
  return guarded([&] {
    SEGVIS_REQUIRE(g && out, "null argument");
    SEGVIS_REQUIRE(format == SEGVIS_GRAPH_JSON || format == SEGVIS_GRAPH_DOT, "unknown format");
    *out = dup(format == SEGVIS_GRAPH_JSON ? segvis::graph_to_json(g->graph)
                                           : segvis::graph_to_dot(g->graph));
    return SEGVIS_OK;
  });
}

segvis_status segvis_certificate(const segvis_graph* g, char** json_out, char** svg_out) {
  return guarded([&] {
    SEGVIS_REQUIRE(g && json_out, "null argument");
    const segvis::Certificate c = segvis::build_certificate(g->graph);
    std::string svg;
    if (svg_out) svg = segvis::certificate_svg(g->graph.points(), c);
    *json_out = dup(segvis::certificate_to_json(c));
    if (svg_out) *svg_out = dup(svg);
    return SEGVIS_OK;
  });
}

segvis_status segvis_visibility(const segvis_graph* g, const int* members, size_t count, int a,
                                int b, char** out) {
  return guarded([&] {
    SEGVIS_REQUIRE(g && out && (members || count == 0), "null argument");
    segvis::VertexSet u;
    for (size_t k = 0; k < count; ++k) {
      if (members[k] < 0 || members[k] >= g->graph.vertex_count())
        return fail(SEGVIS_OUT_OF_RANGE, "vertex index out of range");
      u.set(members[k]);
    }
    if (a == -1 && b == -1) {
      *out = dup(segvis::verdict_to_json(segvis::is_mutual_visibility_set(g->graph, u)));
    } else {
      if (a < 0 || b < 0 || a >= g->graph.vertex_count() || b >= g->graph.vertex_count())
        return fail(SEGVIS_OUT_OF_RANGE, "vertex index out of range");
      *out = dup(segvis::verdict_to_json(segvis::is_mutually_visible(g->graph, u, a, b)));
    }
    return SEGVIS_OK;
  });
}

segvis_status segvis_mu(const segvis_graph* g, const segvis_mu_options* options, char** out) {
  return guarded([&] {
    SEGVIS_REQUIRE(g && out, "null argument");
    segvis_mu_options opt{1, 0.0, 1, 0};
    if (options) opt = *options;
    segvis::SolverOptions so;
    so.threads = opt.threads > 0 ? opt.threads : 1;
    if (opt.time_budget_seconds > 0)
      so.time_budget = std::chrono::milliseconds(
          static_cast<long long>(opt.time_budget_seconds * 1000.0 + 0.5));
    std::optional<int> lower;
    if (opt.use_certificate) {
      const segvis::Certificate c = segvis::build_certificate(g->graph);
      segvis::VertexSet w = g->graph.all();
      for (const auto& s : c.blockers) w.reset(g->graph.index_of(s));
      so.witness_hint = w;
      lower = c.mu_lower_bound;
    }
    const segvis::MuResult r = segvis::mu_exact(g->graph, lower, std::nullopt, so);
    *out = dup(segvis::report_to_json(g->graph, r, opt.include_timing != 0));
    return r.timed_out ? fail(SEGVIS_TIMEOUT, "time budget exhausted; bounds bracketed")
                       : SEGVIS_OK;
  });
}

segvis_status segvis_refute_size(const segvis_graph* g, int k, int threads, int* refuted) {
  return guarded([&] {
    SEGVIS_REQUIRE(g && refuted, "null argument");
    segvis::SolverOptions so;
    so.threads = threads > 0 ? threads : 1;
    *refuted = segvis::refute_size(g->graph, k, so) ? 1 : 0;
    return SEGVIS_OK;
  });
}

segvis_status segvis_reproduce(int threads, uint64_t seed, int text, char** out) {
  return guarded([&] {
    SEGVIS_REQUIRE(out, "null argument");
    segvis::ReproduceOptions ro;
    ro.threads = threads > 0 ? threads : 1;
    ro.seed = seed;
    const auto rows = segvis::reproduce(ro);
    *out = dup(text ? segvis::reproduce_to_text(rows) : segvis::reproduce_to_json(rows));
    return segvis::all_pass(rows) ? SEGVIS_OK
                                  : fail(SEGVIS_MISMATCH, "reproduction table has failing rows");
  });
}

segvis_status segvis_sweep(int n_min, int n_max, int count, uint64_t seed, char** out,
                           int* violations) {
  return guarded([&] {
    SEGVIS_REQUIRE(out, "null argument");
    segvis::SweepOptions so;
    so.n_min = n_min;
    so.n_max = n_max;
    so.count = count;
    so.seed = seed;
    const segvis::SweepStats st = segvis::sweep(so);
    *out = dup(segvis::sweep_to_json(st));
    if (violations)
      *violations = st.diameter_violations + st.certificate_failures + st.fallback_invocations;
    return SEGVIS_OK;
  });
}

}  // extern "C"
