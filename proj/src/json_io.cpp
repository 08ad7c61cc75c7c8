// Copyright 2026 The Tangle Authors.
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

#include "tangle/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tangle {
namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

const Json& field(const Json& j, const char* key, const char* type) {
  if (!j.is_object()) fail(std::string(type) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(type) + " is missing \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  auto v = j.get<long long>();
  if (v < -1'000'000 || v > 1'000'000) {
    fail(std::string(what) + " is out of range");
  }
  return static_cast<int>(v);
}

Label as_label(const Json& j) {
  if (!j.is_string()) fail("labels must be strings such as \"3\" or \"3'\"");
  return Label::parse(j.get<std::string>());
}

}  // namespace

Json to_json(const Shape& s) { return Json(s.rows()); }

Json to_json(const StandardTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const TangledDiagram& d) {
  Json arcs = Json::array();
  auto sorted = d.arcs;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& a : sorted) arcs.push_back({a.left, a.right});
  Json res = Json::object();
  for (const auto& [v, r] : d.resolutions) res[std::to_string(v)] = to_string(r);
  return Json{{"arcs", std::move(arcs)}, {"n", d.n}, {"resolutions", res}};
}

Json to_json(const PartialMatching& m) {
  Json ground = Json::array();
  for (const auto& l : m.ground) ground.push_back(l.to_string());
  Json pairs = Json::array();
  for (const auto& [a, b] : m.pairs) {
    pairs.push_back({a.to_string(), b.to_string()});
  }
  return Json{{"ground", std::move(ground)}, {"pairs", std::move(pairs)}};
}

Json to_json(const VacillatingTableau& v) {
  Json shapes = Json::array();
  for (const auto& s : v.shapes) shapes.push_back(to_json(s));
  return Json{{"n", v.n}, {"shapes", std::move(shapes)}};
}

Shape shape_from_json(const Json& j) {
  if (!j.is_array()) fail("shape must be an array of row lengths");
  std::vector<int> rows;
  for (const auto& r : j) rows.push_back(as_int(r, "shape row"));
  return Shape(std::move(rows));
}

StandardTableau tableau_from_json(const Json& j) {
  if (!j.is_array()) fail("tableau must be an array of rows");
  StandardTableau::Rows rows;
  for (const auto& r : j) {
    if (!r.is_array()) fail("tableau rows must be arrays");
    auto& row = rows.emplace_back();
    for (const auto& x : r) row.push_back(as_label(x));
  }
  return StandardTableau(std::move(rows));
}

TangledDiagram diagram_from_json(const Json& j) {
  TangledDiagram d;
  d.n = as_int(field(j, "n", "diagram"), "n");
  const Json& arcs = field(j, "arcs", "diagram");
  if (!arcs.is_array()) fail("\"arcs\" must be an array");
  for (const auto& a : arcs) {
    if (!a.is_array() || a.size() != 2) fail("each arc must be [left, right]");
    d.arcs.push_back({as_int(a[0], "arc endpoint"), as_int(a[1], "arc endpoint")});
  }
  d.sort_arcs();
  if (auto it = j.find("resolutions"); it != j.end()) {
    if (!it->is_object()) fail("\"resolutions\" must be an object");
    for (const auto& [key, value] : it->items()) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
      if (ec != std::errc() || ptr != key.data() + key.size()) {
        fail("resolution key '" + key + "' is not a vertex number");
      }
      if (!value.is_string()) fail("resolution values must be strings");
      d.resolutions[v] = parse_resolution(value.get<std::string>());
    }
  }
  if (auto violation = validate(d)) fail("invalid tangled-diagram: " + *violation);
  return d;
}

PartialMatching matching_from_json(const Json& j) {
  PartialMatching m;
  const Json& ground = field(j, "ground", "partial matching");
  const Json& pairs = field(j, "pairs", "partial matching");
  if (!ground.is_array() || !pairs.is_array()) {
    fail("\"ground\" and \"pairs\" must be arrays");
  }
  for (const auto& l : ground) m.ground.push_back(as_label(l));
  std::sort(m.ground.begin(), m.ground.end());
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) fail("each pair must have two labels");
    Label a = as_label(p[0]);
    Label b = as_label(p[1]);
    if (b < a) std::swap(a, b);
    m.pairs.emplace_back(a, b);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  if (auto violation = validate(m)) fail("invalid partial matching: " + *violation);
  return m;
}

VacillatingTableau tableau_sequence_from_json(const Json& j) {
  VacillatingTableau v;
  v.n = as_int(field(j, "n", "vacillating tableau"), "n");
  const Json& shapes = field(j, "shapes", "vacillating tableau");
  if (!shapes.is_array()) fail("\"shapes\" must be an array");
  for (const auto& s : shapes) v.shapes.push_back(shape_from_json(s));
  if (auto violation = validate(v)) {
    fail("invalid vacillating tableau: " + *violation);
  }
  return v;
}

}  // namespace tangle
