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

// Tangled-diagrams: graphs on 1..n with vertex degree at most 2 (a loop counts
// twice), double arcs allowed, and a crossing/nesting choice at every vertex
// where two distinct arcs meet.
//
// Inflation splits each degree-2 vertex v into v < v' and yields a partial
// matching on the primed alphabet. Which of the two arcs receives v is decided
// locally at v:
//
//   arcs (v,a),(v,b), a<b      crossing: (v,a),(v',b)    nesting: (v,b),(v',a)
//   arcs (a,v),(b,v), a<b      crossing: (a,v),(b,v')    nesting: (a,v'),(b,v)
//   double arc (i,j),(i,j)     crossing: (i,j),(i',j')   nesting: (i,j'),(i',j)
//   transit (a,v),(v,b)        crossing: (a,v'),(v,b)    nesting: (a,v),(v',b)
//   loop (v,v)                 (v,v')
//
// Degree-1 and isolated vertices keep the single unprimed label v.

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangle/young.hpp"

namespace tangle {

struct Arc {
  int left = 0;
  int right = 0;

  bool is_loop() const { return left == right; }
  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

enum class Resolution { crossing, nesting };

const char* to_string(Resolution r);
Resolution parse_resolution(const std::string& text);

struct TangledDiagram {
  int n = 0;
  // Sorted arc multiset. Generators and deflate() always produce sorted arcs;
  // call sort_arcs() after building one by hand if equality matters.
  std::vector<Arc> arcs;
  // Exactly the degree-2 vertices that do not carry a loop.
  std::map<int, Resolution> resolutions;

  void sort_arcs();
  // Per-vertex degree, index 0 unused.
  std::vector<int> degrees() const;

  friend bool operator==(const TangledDiagram&,
                         const TangledDiagram&) = default;
};

// The first violated structural invariant, or nullopt when d is valid.
std::optional<std::string> validate(const TangledDiagram& d);

using LabelPair = std::pair<Label, Label>;

struct PartialMatching {
  // Sorted, duplicate free.
  std::vector<Label> ground;
  // Each pair stored as (smaller, larger); pairs sorted.
  std::vector<LabelPair> pairs;

  friend bool operator==(const PartialMatching&,
                         const PartialMatching&) = default;
};

// Structural check: sorted distinct ground, pairs drawn from the ground,
// every label used at most once. Does not check the inflation shape.
std::optional<std::string> validate(const PartialMatching& m);

// Throws std::invalid_argument on an invalid diagram.
PartialMatching inflate(const TangledDiagram& d);

// Identifies v with v' and reads the resolutions back off the matching.
// The vertex count is the number of unprimed labels, which must be exactly
// 1..n. Throws std::invalid_argument when m is not the inflation of any
// tangled-diagram.
TangledDiagram deflate(const PartialMatching& m);

// For disjoint pairs, with each pair read as (smaller, larger): a and b cross
// when a1 < b1 < a2 < b2 up to swapping a and b, and nest when one contains
// the other. Shared labels throw.
bool arcs_cross(LabelPair a, LabelPair b);
bool arcs_nest(LabelPair a, LabelPair b);

// Largest set of pairwise crossing (nesting) pairs. At most 64 pairs.
int max_crossing(const PartialMatching& m);
int max_nesting(const PartialMatching& m);

int crossing_number(const TangledDiagram& d);
int nesting_number(const TangledDiagram& d);

struct DiagramClass {
  bool perfect_matching = false;
  bool partition = false;
  bool braid = false;

  friend bool operator==(const DiagramClass&, const DiagramClass&) = default;
};

DiagramClass classify(const TangledDiagram& d);

}  // namespace tangle
