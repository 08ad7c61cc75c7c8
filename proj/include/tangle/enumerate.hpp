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

// Exhaustive generators and exact counters.
//
// Notation: f_k(m) is the number of perfect matchings on m points with no k
// pairwise crossing arcs. Tangled-diagrams without isolated vertices are
// counted by summing binom(n, l) f_k(2n - l) over the number l of degree-1
// vertices; adding isolated vertices is one more binomial convolution.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tangle/bijection.hpp"
#include "tangle/tangle.hpp"

namespace tangle {

using Count = boost::multiprecision::cpp_int;

inline constexpr int kDefaultDiagramBound = 6;
inline constexpr int kDefaultTableauBound = 8;

using DiagramSink = std::function<void(const TangledDiagram&)>;
using TableauSink = std::function<void(const VacillatingTableau&)>;

// Streams every valid tangled-diagram on [n] once. Arc multisets come in
// lexicographic order (a multiset before its extensions), and for each
// multiset the resolutions in lexicographic order by vertex with crossing
// before nesting. Throws std::invalid_argument when n is outside [0, bound].
void gen_tangled(int n, const DiagramSink& sink,
                 int bound = kDefaultDiagramBound);

// Streams every empty-to-empty vacillating tableau of length 2n whose shapes
// have at most max_rows rows and whose moves all lie in `allowed`. Order is
// depth first, trying moves in kAllMoves order and squares by row.
void gen_vt(int n, std::optional<int> max_rows, const MoveSet& allowed,
            const TableauSink& sink, int bound = kDefaultTableauBound);

Count catalan(int m);
Count binomial(int n, int k);

// f_k(m) for every m in [0, max_points], from one walk over shapes with
// fewer than k rows. Requires k >= 2.
std::vector<Count> matching_counts(int k, int max_points);

Count count_matchings(int k, int m);

// Closed form for f_3 on an even number of points. Throws on odd m.
Count f3_closed_form(int m);

// k-noncrossing tangled-diagrams on [n] with no isolated vertex.
Count count_no_isolated(int k, int n);

// All k-noncrossing tangled-diagrams on [n].
Count count_all(int k, int n);

// Empty-to-empty vacillating tableaux of length 2n with fewer than k rows,
// counted by a walk over shapes. Without isolated vertices the NN move is
// excluded.
Count count_by_vt(int k, int n, bool allow_isolated = true);

struct SequenceTable {
  std::string name;
  int start = 1;
  std::vector<Count> terms;

  // One "n,count" line per term, no header.
  std::string to_csv() const;
  // {"name":...,"start":...,"terms":[{"count":2,"n":1},...]} with counts as
  // bare JSON integers of any size.
  std::string to_json() const;
};

// count_all(k, n) for n = 1..max_n.
SequenceTable tangled_table(int k, int max_n);

// The first ten 3-noncrossing counts.
SequenceTable paper_table();

}  // namespace tangle
