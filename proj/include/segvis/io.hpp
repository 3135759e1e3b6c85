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

// Serialization: point-set files, graph exports, result JSON and SVG.
//
// Point sets are either JSON ({"points": [[x, y], ...]}) or CSV (one "x,y"
// per line). Every writer emits a fixed key and element order, so equal
// inputs give byte-identical output.

#pragma once

#include <string>
#include <string_view>

#include "segvis/constructions.hpp"
#include "segvis/geometry.hpp"
#include "segvis/graph.hpp"
#include "segvis/solver.hpp"
#include "segvis/visibility.hpp"

namespace segvis {

enum class PointFormat { kJson, kCsv };

// Throws kParse with a line number on malformed text, and the PointSet
// validation errors (kOutOfRange, kNotGeneralPosition, ...) otherwise.
PointSet parse_points(std::string_view text, PointFormat format);
// Format chosen by extension (.csv), else by content.
PointSet load_points(const std::string& path);

std::string points_to_json(const PointSet& points);
std::string points_to_csv(const PointSet& points);
void save_points(const PointSet& points, const std::string& path);

std::string graph_to_json(const DisjointnessGraph& g);
std::string graph_to_dot(const DisjointnessGraph& g);

std::string certificate_to_json(const Certificate& c);
std::string verdict_to_json(const PairVerdict& v);
std::string verdict_to_json(const VisibilityCheck& check);

// elapsed_ms is written only when include_timing is set.
std::string report_to_json(const DisjointnessGraph& g, const MuResult& r, bool include_timing);

// Points, dashed hull, and the blocker segments drawn over the rest.
std::string certificate_svg(const PointSet& points, const Certificate& c);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace segvis
