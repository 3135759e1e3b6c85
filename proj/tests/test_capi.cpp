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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>

#include "segvis/segvis.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  segvis_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("point sets and graphs") {
  segvis_pointset* ps = nullptr;
  REQUIRE(segvis_pointset_generate("cacerola", 0, &ps) == SEGVIS_OK);
  CHECK(segvis_pointset_size(ps) == 7);
  int64_t x = 0, y = 0;
  CHECK(segvis_pointset_get(ps, 0, &x, &y) == SEGVIS_OK);
  CHECK(x == 121);
  CHECK(y == 204);
  CHECK(segvis_pointset_get(ps, 7, &x, &y) == SEGVIS_OUT_OF_RANGE);

  segvis_graph* g = nullptr;
  REQUIRE(segvis_graph_build(ps, &g) == SEGVIS_OK);
  CHECK(segvis_graph_vertex_count(g) == 21);
  CHECK(segvis_graph_is_connected(g) == 1);
  CHECK(segvis_graph_diameter(g) == 3);
  int i = 0, j = 0;
  CHECK(segvis_graph_vertex(g, 6, &i, &j) == SEGVIS_OK);
  CHECK(i == 1);
  CHECK(j == 2);

  char* out = nullptr;
  CHECK(segvis_graph_export(g, SEGVIS_GRAPH_DOT, &out) == SEGVIS_OK);
  CHECK(take(out).rfind("graph D {", 0) == 0);
  CHECK(segvis_graph_export(g, static_cast<segvis_graph_format>(7), &out) == SEGVIS_INVALID_ARGUMENT);

  char* json = nullptr;
  char* svg = nullptr;
  CHECK(segvis_certificate(g, &json, &svg) == SEGVIS_OK);
  CHECK(take(json).find("\"Hull6Case\"") != std::string::npos);
  CHECK(take(svg).rfind("<svg", 0) == 0);

  segvis_mu_options opt{2, 0.0, 1, 0};
  CHECK(segvis_mu(g, &opt, &out) == SEGVIS_OK);
  CHECK(take(out).find("\"mu\":12") != std::string::npos);
  int refuted = 0;
  CHECK(segvis_refute_size(g, 13, 1, &refuted) == SEGVIS_OK);
  CHECK(refuted == 1);

  const int members[] = {0, 1, 2};
  CHECK(segvis_visibility(g, members, 3, -1, -1, &out) == SEGVIS_OK);
  CHECK(take(out).find("\"visible\"") != std::string::npos);
  CHECK(segvis_visibility(g, members, 3, 0, 1, &out) == SEGVIS_OK);
  segvis_string_free(out);
  const int bad[] = {0, 99};
  CHECK(segvis_visibility(g, bad, 2, -1, -1, &out) == SEGVIS_OUT_OF_RANGE);

  segvis_graph_free(g);
  segvis_pointset_free(ps);
}

TEST_CASE("errors map to status codes") {
  const int64_t collinear[] = {0, 0, 1, 1, 2, 2};
  segvis_pointset* ps = nullptr;
  CHECK(segvis_pointset_create(collinear, 3, &ps) == SEGVIS_NOT_GENERAL_POSITION);
  CHECK(std::strstr(segvis_last_error(), "collinear") != nullptr);
  CHECK(segvis_pointset_generate("nonsense", 0, &ps) == SEGVIS_INVALID_ARGUMENT);
  CHECK(segvis_pointset_load("/nonexistent/points.json", &ps) == SEGVIS_INVALID_ARGUMENT);
  CHECK(segvis_pointset_create(nullptr, 3, &ps) == SEGVIS_INVALID_ARGUMENT);
  CHECK(std::string(segvis_status_name(SEGVIS_TIMEOUT)) == "timeout");
  CHECK(std::string(segvis_version()) == "1.0.0");

  const int64_t four[] = {0, 0, 10, 0, 10, 10, 0, 10};
  REQUIRE(segvis_pointset_create(four, 4, &ps) == SEGVIS_OK);
  segvis_graph* g = nullptr;
  REQUIRE(segvis_graph_build(ps, &g) == SEGVIS_OK);
  CHECK(segvis_graph_diameter(g) == -1);
  char* out = nullptr;
  CHECK(segvis_certificate(g, &out, nullptr) == SEGVIS_INVALID_ARGUMENT);
  segvis_mu_options plain{1, 0.0, 0, 0};
  CHECK(segvis_mu(g, &plain, &out) == SEGVIS_DISCONNECTED);
  segvis_graph_free(g);
  segvis_pointset_free(ps);
  segvis_graph_free(nullptr);
  segvis_string_free(nullptr);
}

TEST_CASE("timeout still writes bounds") {
  segvis_pointset* ps = nullptr;
  REQUIRE(segvis_pointset_generate("random:11:5", 0, &ps) == SEGVIS_OK);
  segvis_graph* g = nullptr;
  REQUIRE(segvis_graph_build(ps, &g) == SEGVIS_OK);
  segvis_mu_options opt{1, 0.001, 1, 0};
  char* out = nullptr;
  CHECK(segvis_mu(g, &opt, &out) == SEGVIS_TIMEOUT);
  const std::string s = take(out);
  CHECK(s.find("\"timed_out\":true") != std::string::npos);
  CHECK(s.find("\"mu\":null") != std::string::npos);
  segvis_graph_free(g);
  segvis_pointset_free(ps);
}

TEST_CASE("round trip through a file") {
  segvis_pointset* ps = nullptr;
  REQUIRE(segvis_pointset_generate("convex:8", 0, &ps) == SEGVIS_OK);
  const char* path = "segvis_capi_roundtrip.csv";
  REQUIRE(segvis_pointset_save(ps, path) == SEGVIS_OK);
  segvis_pointset* back = nullptr;
  REQUIRE(segvis_pointset_load(path, &back) == SEGVIS_OK);
  char* a = nullptr;
  char* b = nullptr;
  segvis_pointset_to_json(ps, &a);
  segvis_pointset_to_json(back, &b);
  CHECK(take(a) == take(b));
  std::remove(path);
  segvis_pointset_free(ps);
  segvis_pointset_free(back);
}
