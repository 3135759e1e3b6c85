/* Copyright 2026 The segvis Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libsegvis.
 *
 * Objects are opaque handles released with their matching _free function.
 * Every fallible call returns a segvis_status; on failure a description is
 * available from segvis_last_error() on the same thread until the next call.
 * Strings returned through char** are heap-allocated and must be released
 * with segvis_string_free().
 */

#ifndef SEGVIS_SEGVIS_H_
#define SEGVIS_SEGVIS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SEGVIS_BUILDING)
#define SEGVIS_API __declspec(dllexport)
#else
#define SEGVIS_API __declspec(dllimport)
#endif
#else
#define SEGVIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum segvis_status {
  SEGVIS_OK = 0,
  SEGVIS_INVALID_ARGUMENT = 1,
  SEGVIS_PARSE_ERROR = 2,
  SEGVIS_NOT_GENERAL_POSITION = 3,
  SEGVIS_OUT_OF_RANGE = 4,
  SEGVIS_DISCONNECTED = 5,
  SEGVIS_CONSTRUCTION_FAILED = 6,
  SEGVIS_TIMEOUT = 7, /* result still written, with bracketing bounds */
  SEGVIS_MISMATCH = 8, /* reproduction table written, some rows failed */
  SEGVIS_INTERNAL = 9
} segvis_status;

typedef enum segvis_graph_format { SEGVIS_GRAPH_JSON = 0, SEGVIS_GRAPH_DOT = 1 } segvis_graph_format;

typedef struct segvis_pointset segvis_pointset;
typedef struct segvis_graph segvis_graph;

typedef struct segvis_mu_options {
  int threads;                /* <= 0 means 1 */
  double time_budget_seconds; /* <= 0 means unbounded */
  int use_certificate;        /* start from the constructive lower bound */
  int include_timing;         /* write elapsed_ms */
} segvis_mu_options;

SEGVIS_API const char* segvis_version(void);
SEGVIS_API const char* segvis_last_error(void);
SEGVIS_API const char* segvis_status_name(segvis_status status);
SEGVIS_API void segvis_string_free(char* s);

/* Point sets. xy holds n interleaved pairs x0, y0, x1, y1, ... */
SEGVIS_API segvis_status segvis_pointset_create(const int64_t* xy, size_t n, segvis_pointset** out);
SEGVIS_API segvis_status segvis_pointset_load(const char* path, segvis_pointset** out);
/* spec: "convex:N", "double-chain:P,Q", "random:N[:SEED]" or "cacerola". */
SEGVIS_API segvis_status segvis_pointset_generate(const char* spec, uint64_t seed,
                                                  segvis_pointset** out);
SEGVIS_API segvis_status segvis_pointset_save(const segvis_pointset* ps, const char* path);
SEGVIS_API segvis_status segvis_pointset_to_json(const segvis_pointset* ps, char** out);
SEGVIS_API size_t segvis_pointset_size(const segvis_pointset* ps);
SEGVIS_API segvis_status segvis_pointset_get(const segvis_pointset* ps, size_t i, int64_t* x,
                                             int64_t* y);
SEGVIS_API void segvis_pointset_free(segvis_pointset* ps);

/* Disjointness graph. Vertices are the segments (i, j), i < j, in
 * lexicographic order. */
SEGVIS_API segvis_status segvis_graph_build(const segvis_pointset* ps, segvis_graph** out);
SEGVIS_API void segvis_graph_free(segvis_graph* g);
SEGVIS_API int segvis_graph_vertex_count(const segvis_graph* g);
SEGVIS_API int segvis_graph_edge_count(const segvis_graph* g);
SEGVIS_API int segvis_graph_is_connected(const segvis_graph* g);
/* -1 when disconnected. */
SEGVIS_API int segvis_graph_diameter(const segvis_graph* g);
SEGVIS_API segvis_status segvis_graph_vertex(const segvis_graph* g, int v, int* i, int* j);
SEGVIS_API segvis_status segvis_graph_export(const segvis_graph* g, segvis_graph_format format,
                                             char** out);

/* Certificate JSON; svg_out may be NULL. */
SEGVIS_API segvis_status segvis_certificate(const segvis_graph* g, char** json_out,
                                            char** svg_out);

/* Verdict JSON for the vertex set `members` (vertex indices). When a != b
 * the verdict is for that pair only; pass a == b == -1 for the whole set. */
SEGVIS_API segvis_status segvis_visibility(const segvis_graph* g, const int* members,
                                           size_t count, int a, int b, char** out);

/* Report JSON. Returns SEGVIS_TIMEOUT (with bounds written) on timeout. */
SEGVIS_API segvis_status segvis_mu(const segvis_graph* g, const segvis_mu_options* options,
                                   char** out);
SEGVIS_API segvis_status segvis_refute_size(const segvis_graph* g, int k, int threads,
                                            int* refuted);

/* Golden table as JSON (text != 0 for a plain table). Returns
 * SEGVIS_MISMATCH when a row fails. */
SEGVIS_API segvis_status segvis_reproduce(int threads, uint64_t seed, int text, char** out);
SEGVIS_API segvis_status segvis_sweep(int n_min, int n_max, int count, uint64_t seed,
                                      char** out, int* violations);

#ifdef __cplusplus
}
#endif

#endif /* SEGVIS_SEGVIS_H_ */
