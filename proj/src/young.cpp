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

#include "tangle/young.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace tangle {

std::string Label::to_string() const {
  std::string s = std::to_string(index);
  if (primed) s += '\'';
  return s;
}

Label Label::parse(std::string_view text) {
  Label label;
  if (!text.empty() && text.back() == '\'') {
    label.primed = true;
    text.remove_suffix(1);
  }
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, label.index);
  if (text.empty() || ec != std::errc() || ptr != last || label.index < 1) {
    throw std::invalid_argument("malformed label '" + std::string(text) +
                                "'");
  }
  return label;
}

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) {
      throw std::invalid_argument("shape rows must be positive");
    }
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw std::invalid_argument("shape rows must be weakly decreasing");
    }
  }
  size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

int Shape::row_length(int row) const {
  return row < num_rows() ? rows_[static_cast<std::size_t>(row)] : 0;
}

std::string Shape::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows_[i]);
  }
  return s + ")";
}

std::vector<ShapeStep> shape_corners(const Shape& shape) {
  std::vector<ShapeStep> out;
  const auto& rows = shape.rows();
  for (int r = 0; r < shape.num_rows(); ++r) {
    if (shape.row_length(r + 1) < rows[r]) {
      std::vector<int> next = rows;
      if (--next[r] == 0) next.pop_back();
      out.push_back({r + 1, Shape(std::move(next))});
    }
  }
  return out;
}

std::vector<ShapeStep> shape_extensions(const Shape& shape) {
  std::vector<ShapeStep> out;
  const auto& rows = shape.rows();
  for (int r = 0; r <= shape.num_rows(); ++r) {
    if (r == 0 || shape.row_length(r) < rows[r - 1]) {
      std::vector<int> next = rows;
      if (r == shape.num_rows()) {
        next.push_back(1);
      } else {
        ++next[r];
      }
      out.push_back({r + 1, Shape(std::move(next))});
    }
  }
  return out;
}

std::optional<int> removed_row(const Shape& larger, const Shape& smaller) {
  if (larger.size() != smaller.size() + 1) return std::nullopt;
  std::optional<int> row;
  for (int r = 0; r < larger.num_rows(); ++r) {
    int diff = larger.row_length(r) - smaller.row_length(r);
    if (diff == 0) continue;
    if (diff != 1 || row) return std::nullopt;
    row = r + 1;
  }
  if (smaller.num_rows() > larger.num_rows()) return std::nullopt;
  return row;
}

StandardTableau::StandardTableau(Rows rows) : rows_(std::move(rows)) {
  std::vector<Label> all;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) {
      throw std::invalid_argument("tableau rows must be nonempty");
    }
    if (r > 0 && row.size() > rows_[r - 1].size()) {
      throw std::invalid_argument("tableau row lengths must weakly decrease");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].index < 1) {
        throw std::invalid_argument("tableau label index must be positive");
      }
      if (c > 0 && !(row[c - 1] < row[c])) {
        throw std::invalid_argument("tableau row " + std::to_string(r + 1) +
                                    " is not strictly increasing");
      }
      if (r > 0 && !(rows_[r - 1][c] < row[c])) {
        throw std::invalid_argument("tableau column " + std::to_string(c + 1) +
                                    " is not strictly increasing");
      }
      all.push_back(row[c]);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("tableau entries must be distinct");
  }
}

Shape StandardTableau::shape() const {
  std::vector<int> lengths;
  lengths.reserve(rows_.size());
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  return Shape(std::move(lengths));
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

bool StandardTableau::contains(Label x) const {
  for (const auto& row : rows_) {
    if (std::binary_search(row.begin(), row.end(), x)) return true;
  }
  return false;
}

std::string StandardTableau::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += ',';
    s += '[';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ',';
      s += rows_[r][c].to_string();
    }
    s += ']';
  }
  return s + "]";
}

StandardTableau rsk_insert(const StandardTableau& t, Label x) {
  if (t.contains(x)) {
    throw std::invalid_argument("rsk_insert: " + x.to_string() +
                                " is already in " + t.to_string());
  }
  auto rows = t.rows();
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return StandardTableau(std::move(rows));
    }
    std::swap(*it, x);
  }
  rows.push_back({x});
  return StandardTableau(std::move(rows));
}

std::pair<StandardTableau, Label> rsk_extract(const StandardTableau& t,
                                              const Shape& target) {
  auto row = removed_row(t.shape(), target);
  if (!row) {
    throw std::invalid_argument("rsk_extract: " + target.to_string() +
                                " is not " + t.shape().to_string() +
                                " minus a corner");
  }
  auto rows = t.rows();
  auto r = static_cast<std::size_t>(*row - 1);
  Label x = rows[r].back();
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  while (r-- > 0) {
    auto& above = rows[r];
    // Column strictness guarantees some entry of the row above is < x.
    auto it = std::lower_bound(above.begin(), above.end(), x);
    std::swap(*std::prev(it), x);
  }
  return {StandardTableau(std::move(rows)), x};
}

StandardTableau tableau_place(const StandardTableau& t, Label x,
                              const Shape& at) {
  auto row = removed_row(at, t.shape());
  if (!row) {
    throw std::invalid_argument("tableau_place: " + at.to_string() +
                                " is not " + t.shape().to_string() +
                                " plus one square");
  }
  if (t.contains(x)) {
    throw std::invalid_argument("tableau_place: " + x.to_string() +
                                " is already in " + t.to_string());
  }
  auto rows = t.rows();
  auto r = static_cast<std::size_t>(*row - 1);
  if (r == rows.size()) rows.emplace_back();
  rows[r].push_back(x);
  try {
    return StandardTableau(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("tableau_place: placing " + x.to_string() +
                                " in row " + std::to_string(*row) + " of " +
                                t.to_string() + ": " + e.what());
  }
}

StandardTableau tableau_remove(const StandardTableau& t, Label x) {
  auto rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    auto it = std::find(row.begin(), row.end(), x);
    if (it == row.end()) continue;
    bool at_row_end = std::next(it) == row.end();
    bool nothing_below = r + 1 == rows.size() || rows[r + 1].size() < row.size();
    if (!at_row_end || !nothing_below) {
      throw std::invalid_argument("tableau_remove: " + x.to_string() +
                                  " is not in a corner of " + t.to_string());
    }
    row.pop_back();
    if (row.empty()) rows.pop_back();
    return StandardTableau(std::move(rows));
  }
  throw std::invalid_argument("tableau_remove: " + x.to_string() +
                              " is not in " + t.to_string());
}

}  // namespace tangle
