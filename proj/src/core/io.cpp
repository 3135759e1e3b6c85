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

#include "segvis/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "segvis/error.hpp"

namespace segvis {

using nlohmann::json;

namespace {

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

std::int64_t parse_int(std::string_view s, int line) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::kParse, fmt::format("line {}: expected an integer, got '{}'", line, s));
  return v;
}

PointSet parse_json_points(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse,
                fmt::format("line {}: malformed JSON ({})", line_of(text, e.byte), e.what()));
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw Error(ErrorCode::kParse, "line 1: expected an object with a \"points\" array");
  std::vector<Point> pts;
  for (const auto& item : doc["points"]) {
    const std::size_t k = pts.size();
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw Error(ErrorCode::kParse,
                  fmt::format("point {}: expected a pair of integers [x, y]", k));
    pts.push_back({item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
  }
  return PointSet(std::move(pts));
}

PointSet parse_csv_points(std::string_view text) {
  std::vector<Point> pts;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view row = text.substr(pos, end - pos);
    ++line;
    pos = end + 1;
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    if (row.find_first_not_of(" \t") == std::string_view::npos) continue;
    const std::size_t comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
      throw Error(ErrorCode::kParse, fmt::format("line {}: expected 'x,y'", line));
    pts.push_back({parse_int(row.substr(0, comma), line), parse_int(row.substr(comma + 1), line)});
  }
  return PointSet(std::move(pts));
}

json segment_json(const SegmentId& s) { return json::array({s.i, s.j}); }

}  // namespace

PointSet parse_points(std::string_view text, PointFormat format) {
  return format == PointFormat::kJson ? parse_json_points(text) : parse_csv_points(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

PointSet load_points(const std::string& path) {
  const std::string text = read_text_file(path);
  const bool csv_ext = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool looks_json = first != std::string::npos && text[first] == '{';
  return parse_points(text, csv_ext || !looks_json ? PointFormat::kCsv : PointFormat::kJson);
}

std::string points_to_json(const PointSet& points) {
  json arr = json::array();
  for (const Point& p : points.points()) arr.push_back(json::array({p.x, p.y}));
  return json{{"points", arr}}.dump() + "\n";
}

std::string points_to_csv(const PointSet& points) {
  std::string out;
  for (const Point& p : points.points()) out += fmt::format("{},{}\n", p.x, p.y);
  return out;
}

void save_points(const PointSet& points, const std::string& path) {
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  write_text_file(path, csv ? points_to_csv(points) : points_to_json(points));
}

std::string graph_to_json(const DisjointnessGraph& g) {
  json verts = json::array();
  for (const auto& s : g.vertices()) verts.push_back(segment_json(s));
  json edges = json::array();
  for (VertexId a = 0; a < g.vertex_count(); ++a)
    g.neighbors(a).for_each([&](VertexId b) {
      if (a < b) edges.push_back(json::array({a, b}));
    });
  json doc;
  doc["n_points"] = g.n_points();
  doc["vertices"] = verts;
  doc["edges"] = edges;
  return doc.dump() + "\n";
}

std::string graph_to_dot(const DisjointnessGraph& g) {
  std::string out = "graph D {\n";
  for (const auto& s : g.vertices()) out += fmt::format("  \"{}-{}\";\n", s.i, s.j);
  for (VertexId a = 0; a < g.vertex_count(); ++a)
    g.neighbors(a).for_each([&](VertexId b) {
      if (a >= b) return;
      const auto& sa = g.segment(a);
      const auto& sb = g.segment(b);
      out += fmt::format("  \"{}-{}\" -- \"{}-{}\";\n", sa.i, sa.j, sb.i, sb.j);
    });
  out += "}\n";
  return out;
}

std::string certificate_to_json(const Certificate& c) {
  json s = json::array();
  for (const auto& seg : c.blockers) s.push_back(segment_json(seg));
  json doc;
  doc["strategy"] = to_string(c.strategy);
  doc["case"] = c.case_id ? json(*c.case_id) : json(nullptr);
  doc["S"] = s;
  doc["size"] = c.size();
  doc["mu_lower_bound"] = c.mu_lower_bound;
  doc["verified"] = c.verified;
  if (!c.diagnostics.empty()) doc["diagnostics"] = c.diagnostics;
  return doc.dump() + "\n";
}

std::string verdict_to_json(const PairVerdict& v) {
  json doc;
  doc["visible"] = v.visible;
  doc["distance"] = v.distance == kUnreachable ? json(nullptr) : json(v.distance);
  doc["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  doc["failing_pair"] = v.visible ? json(nullptr) : json::array({v.a, v.b});
  return doc.dump() + "\n";
}

std::string verdict_to_json(const VisibilityCheck& check) {
  if (check.ok) {
    json doc;
    doc["visible"] = true;
    doc["distance"] = nullptr;
    doc["witness"] = nullptr;
    doc["failing_pair"] = nullptr;
    return doc.dump() + "\n";
  }
  return verdict_to_json(*check.failing);
}

std::string report_to_json(const DisjointnessGraph& g, const MuResult& r, bool include_timing) {
  json doc;
  doc["n"] = g.n_points();
  doc["vertices"] = g.vertex_count();
  doc["mu"] = r.mu ? json(*r.mu) : json(nullptr);
  doc["mu_lower"] = r.mu_lower;
  doc["mu_upper"] = r.mu_upper;
  json w = json::array();
  r.witness.for_each([&](VertexId v) { w.push_back(segment_json(g.segment(v))); });
  doc["witness"] = w;
  doc["refuted"] = r.refuted_size ? json(*r.refuted_size) : json(nullptr);
  doc["sets_examined"] = r.refutation_sets_examined;
  doc["total_sets_examined"] = r.total_sets_examined;
  doc["timed_out"] = r.timed_out;
  if (include_timing) doc["elapsed_ms"] = r.elapsed.count();
  return doc.dump() + "\n";
}

std::string certificate_svg(const PointSet& points, const Certificate& c) {
  const auto pts = points.points();
  std::int64_t min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double w = static_cast<double>(std::max<std::int64_t>(1, max_x - min_x));
  const double h = static_cast<double>(std::max<std::int64_t>(1, max_y - min_y));
  const double mx = 0.05 * w, my = 0.05 * h;
  const double vw = w + 2 * mx, vh = h + 2 * my;
  const double stroke = std::max(vw, vh) / 400.0;
  // y grows downward in SVG; flip so the picture matches the coordinates.
  auto X = [&](const Point& p) { return static_cast<double>(p.x - min_x) + mx; };
  auto Y = [&](const Point& p) { return static_cast<double>(max_y - p.y) + my; };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {:.3f} {:.3f}\">\n", vw, vh);
  const HullData hull = convex_hull(points);
  std::string poly;
  for (PointIndex k : hull.hull) poly += fmt::format("{:.3f},{:.3f} ", X(points[k]), Y(points[k]));
  if (!poly.empty()) poly.pop_back();
  out += fmt::format(
      "  <polygon class=\"hull\" points=\"{}\" fill=\"none\" stroke=\"#888888\" "
      "stroke-width=\"{:.3f}\" stroke-dasharray=\"{:.3f},{:.3f}\"/>\n",
      poly, stroke, 4 * stroke, 3 * stroke);
  for (const auto& s : c.blockers)
    out += fmt::format(
        "  <line class=\"blocker\" data-seg=\"{}-{}\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" "
        "y2=\"{:.3f}\" stroke=\"#d62728\" stroke-width=\"{:.3f}\"/>\n",
        s.i, s.j, X(points[s.i]), Y(points[s.i]), X(points[s.j]), Y(points[s.j]), 2 * stroke);
  for (int k = 0; k < points.size(); ++k)
    out += fmt::format(
        "  <circle class=\"point\" data-index=\"{}\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" "
        "fill=\"#1f77b4\"/>\n",
        k, X(points[k]), Y(points[k]), 3 * stroke);
  out += "</svg>\n";
  return out;
}

}  // namespace segvis
