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

// JSON forms. Keys are emitted sorted and labels as strings ("2", "2'"), so
// dump() of any of these values is canonical.
//
//   Shape               [3,1]
//   StandardTableau     [["1","2'"],["3"]]
//   TangledDiagram      {"arcs":[[1,2],[1,2]],"n":2,
//                        "resolutions":{"1":"nesting","2":"nesting"}}
//   PartialMatching     {"ground":["1","1'"],"pairs":[["1","1'"]]}
//   VacillatingTableau  {"n":1,"shapes":[[],[1],[]]}
//
// The from_json_* readers throw std::invalid_argument naming the problem.

#pragma once

#include <json.hpp>

#include "tangle/bijection.hpp"
#include "tangle/tangle.hpp"
#include "tangle/young.hpp"

namespace tangle {

using Json = nlohmann::json;

Json to_json(const Shape& s);
Json to_json(const StandardTableau& t);
Json to_json(const TangledDiagram& d);
Json to_json(const PartialMatching& m);
Json to_json(const VacillatingTableau& v);

Shape shape_from_json(const Json& j);
StandardTableau tableau_from_json(const Json& j);
// Sorts arcs and runs validate().
TangledDiagram diagram_from_json(const Json& j);
PartialMatching matching_from_json(const Json& j);
// Runs validate().
VacillatingTableau tableau_sequence_from_json(const Json& j);

}  // namespace tangle
