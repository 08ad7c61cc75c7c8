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

// Vacillating tableaux and their bijection with tangled-diagrams.
//
// A vacillating tableau of length 2n is a walk of shapes from the empty shape
// back to the empty shape. Each pair of half-steps is one of seven moves:
// NN, RN, NA, AA, AR, RA, RR (N = nothing, A = add a square, R = remove one).
//
// phi walks the tableau left to right. Added squares receive the current
// label, removed squares are extracted by reverse row insertion and the
// extracted label becomes the left end of a new arc. psi walks the inflation
// right to left, row-inserting left endpoints and deleting the squares of
// labels whose arc has already been closed.

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/tangle.hpp"
#include "tangle/young.hpp"

namespace tangle {

enum class Step { nothing, add, remove };

struct Move {
  Step odd = Step::nothing;
  Step even = Step::nothing;

  bool legal() const;
  // Both halves change the shape; such moves split their vertex into j, j'.
  bool splits_vertex() const {
    return odd != Step::nothing && even != Step::nothing;
  }
  // Two-letter code such as "AR".
  std::string code() const;
  static Move parse(std::string_view code);

  friend constexpr auto operator<=>(const Move&, const Move&) = default;
};

namespace moves {
inline constexpr Move NN{Step::nothing, Step::nothing};
inline constexpr Move RN{Step::remove, Step::nothing};
inline constexpr Move NA{Step::nothing, Step::add};
inline constexpr Move AA{Step::add, Step::add};
inline constexpr Move AR{Step::add, Step::remove};
inline constexpr Move RA{Step::remove, Step::add};
inline constexpr Move RR{Step::remove, Step::remove};
}  // namespace moves

// The seven legal moves in canonical order.
inline constexpr std::array<Move, 7> kAllMoves = {
    moves::NN, moves::RN, moves::NA, moves::AA,
    moves::AR, moves::RA, moves::RR};

using MoveSet = std::set<Move>;

MoveSet all_moves();

enum class DiagramKind { matching, partition, braid };

const char* to_string(DiagramKind kind);
DiagramKind parse_kind(std::string_view text);

// Moves whose tableaux correspond to perfect matchings, set partitions or
// braids under beta.
MoveSet allowed_moves(DiagramKind kind);

// Whether the flag for `kind` is set in c.
bool has_kind(const DiagramClass& c, DiagramKind kind);

struct VacillatingTableau {
  int n = 0;
  std::vector<Shape> shapes;  // 2n + 1 shapes, first and last empty

  // Largest row count over all shapes.
  int max_rows() const;

  friend bool operator==(const VacillatingTableau&,
                         const VacillatingTableau&) = default;
};

// Change from one shape to the next, if it is a single step.
std::optional<Step> step_between(const Shape& from, const Shape& to);

std::optional<std::string> validate(const VacillatingTableau& v);

// Throws std::invalid_argument on an invalid tableau.
std::vector<Move> moves_of(const VacillatingTableau& v);

PartialMatching phi(const VacillatingTableau& v);
VacillatingTableau psi(const PartialMatching& m);

TangledDiagram beta(const VacillatingTableau& v);
VacillatingTableau beta_inv(const TangledDiagram& d);

}  // namespace tangle
