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

// Young diagrams, standard tableaux over the primed alphabet
// {1 < 1' < 2 < 2' < ...}, RSK row insertion and its reverse.

#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tangle {

// A vertex index with an optional prime mark. The defaulted ordering compares
// the index first and the mark second, which is exactly 1 < 1' < 2 < 2' < ...
struct Label {
  int index = 0;
  bool primed = false;

  friend constexpr auto operator<=>(const Label&, const Label&) = default;

  // "3" or "3'".
  std::string to_string() const;
  // Inverse of to_string(). Throws std::invalid_argument on malformed text.
  static Label parse(std::string_view text);
};

constexpr Label unprimed(int index) { return Label{index, false}; }
constexpr Label primed(int index) { return Label{index, true}; }

// Integer partition given by its row lengths, top row first. Empty is the
// empty shape.
class Shape {
 public:
  Shape() = default;
  // Throws std::invalid_argument unless rows are positive and weakly
  // decreasing.
  explicit Shape(std::vector<int> rows);
  Shape(std::initializer_list<int> rows) : Shape(std::vector<int>(rows)) {}

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const { return size_; }
  bool empty() const { return rows_.empty(); }

  // Row lengths with the convention that rows past the end have length 0.
  int row_length(int row) const;

  std::string to_string() const;

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.rows_ == b.rows_;
  }
  friend auto operator<=>(const Shape& a, const Shape& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

// Row numbers in the public API are 1-based: row 1 is the top row.
struct ShapeStep {
  int row = 0;
  Shape shape;

  friend bool operator==(const ShapeStep&, const ShapeStep&) = default;
};

// Every shape obtained by deleting one removable corner, ordered by row.
std::vector<ShapeStep> shape_corners(const Shape& shape);

// Every shape obtained by adding one square, ordered by row.
std::vector<ShapeStep> shape_extensions(const Shape& shape);

// If `smaller` is `larger` minus one corner square, the row of that square.
std::optional<int> removed_row(const Shape& larger, const Shape& smaller);

class StandardTableau {
 public:
  using Rows = std::vector<std::vector<Label>>;

  StandardTableau() = default;
  // Throws std::invalid_argument unless rows form a shape and entries are
  // distinct and strictly increasing along rows and down columns.
  explicit StandardTableau(Rows rows);

  const Rows& rows() const { return rows_; }
  Shape shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  bool contains(Label x) const;

  std::string to_string() const;

  friend bool operator==(const StandardTableau&,
                         const StandardTableau&) = default;

 private:
  Rows rows_;
};

// Row insertion. Throws if x is already an entry.
StandardTableau rsk_insert(const StandardTableau& t, Label x);

// Reverse row insertion: removes the square of shape(t) not in `target` and
// bumps its entry upwards, each time displacing the largest smaller entry of
// the row above. Returns (t', j) with rsk_insert(t', j) == t. Throws unless
// target is shape(t) minus one corner.
std::pair<StandardTableau, Label> rsk_extract(const StandardTableau& t,
                                              const Shape& target);

// Writes x into the single square of `at` outside shape(t).
StandardTableau tableau_place(const StandardTableau& t, Label x,
                              const Shape& at);

// Deletes the square holding x, which must be a removable corner.
StandardTableau tableau_remove(const StandardTableau& t, Label x);

}  // namespace tangle
