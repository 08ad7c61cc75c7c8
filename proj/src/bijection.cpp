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

#include "tangle/bijection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tangle {
namespace {

char step_letter(Step s) {
  switch (s) {
    case Step::nothing:
      return 'N';
    case Step::add:
      return 'A';
    case Step::remove:
      return 'R';
  }
  return '?';
}

std::optional<Step> parse_step(char c) {
  switch (c) {
    case 'N':
      return Step::nothing;
    case 'A':
      return Step::add;
    case 'R':
      return Step::remove;
    default:
      return std::nullopt;
  }
}

// Left-to-right state of phi.
class Forward {
 public:
  void half_step(Step step, const Shape& target, Label label) {
    switch (step) {
      case Step::nothing:
        return;
      case Step::add:
        tableau_ = tableau_place(tableau_, label, target);
        return;
      case Step::remove: {
        if (tableau_.empty()) {
          throw std::logic_error("phi: removal from an empty tableau");
        }
        auto [rest, left] = rsk_extract(tableau_, target);
        tableau_ = std::move(rest);
        pairs_.emplace_back(left, label);
        return;
      }
    }
  }

  const StandardTableau& tableau() const { return tableau_; }
  std::vector<LabelPair>& pairs() { return pairs_; }

 private:
  StandardTableau tableau_;
  std::vector<LabelPair> pairs_;
};

}  // namespace

bool Move::legal() const {
  return !(odd == Step::add && even == Step::nothing) &&
         !(odd == Step::nothing && even == Step::remove);
}

std::string Move::code() const {
  return {step_letter(odd), step_letter(even)};
}

Move Move::parse(std::string_view code) {
  if (code.size() == 2) {
    auto odd = parse_step(code[0]);
    auto even = parse_step(code[1]);
    if (odd && even && Move{*odd, *even}.legal()) return Move{*odd, *even};
  }
  throw std::invalid_argument("unknown move code '" + std::string(code) + "'");
}

MoveSet all_moves() { return MoveSet(kAllMoves.begin(), kAllMoves.end()); }

const char* to_string(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::matching:
      return "matching";
    case DiagramKind::partition:
      return "partition";
    case DiagramKind::braid:
      return "braid";
  }
  return "?";
}

DiagramKind parse_kind(std::string_view text) {
  if (text == "matching") return DiagramKind::matching;
  if (text == "partition") return DiagramKind::partition;
  if (text == "braid") return DiagramKind::braid;
  throw std::invalid_argument("unknown diagram class '" + std::string(text) +
                              "'");
}

MoveSet allowed_moves(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::matching:
      return {moves::RN, moves::NA};
    case DiagramKind::partition:
      return {moves::RN, moves::NA, moves::NN, moves::RA};
    case DiagramKind::braid:
      return {moves::RN, moves::NA, moves::NN, moves::AR};
  }
  return {};
}

bool has_kind(const DiagramClass& c, DiagramKind kind) {
  switch (kind) {
    case DiagramKind::matching:
      return c.perfect_matching;
    case DiagramKind::partition:
      return c.partition;
    case DiagramKind::braid:
      return c.braid;
  }
  return false;
}

int VacillatingTableau::max_rows() const {
  int rows = 0;
  for (const auto& s : shapes) rows = std::max(rows, s.num_rows());
  return rows;
}

std::optional<Step> step_between(const Shape& from, const Shape& to) {
  if (from == to) return Step::nothing;
  if (removed_row(to, from)) return Step::add;
  if (removed_row(from, to)) return Step::remove;
  return std::nullopt;
}

std::optional<std::string> validate(const VacillatingTableau& v) {
  if (v.n < 0) return "length is negative";
  if (v.shapes.size() != 2 * static_cast<std::size_t>(v.n) + 1) {
    return "expected " + std::to_string(2 * v.n + 1) + " shapes, got " +
           std::to_string(v.shapes.size());
  }
  if (!v.shapes.front().empty()) return "first shape is not empty";
  if (!v.shapes.back().empty()) return "last shape is not empty";
  for (int j = 1; j <= v.n; ++j) {
    const auto& before = v.shapes[static_cast<std::size_t>(2 * j - 2)];
    const auto& middle = v.shapes[static_cast<std::size_t>(2 * j - 1)];
    const auto& after = v.shapes[static_cast<std::size_t>(2 * j)];
    auto odd = step_between(before, middle);
    auto even = step_between(middle, after);
    if (!odd || !even || !Move{*odd, *even}.legal()) {
      return "step " + std::to_string(j) + " " + before.to_string() + " -> " +
             middle.to_string() + " -> " + after.to_string() +
             " is not an elementary move";
    }
  }
  return std::nullopt;
}

std::vector<Move> moves_of(const VacillatingTableau& v) {
  if (auto violation = validate(v)) {
    throw std::invalid_argument("invalid vacillating tableau: " + *violation);
  }
  std::vector<Move> out;
  out.reserve(static_cast<std::size_t>(v.n));
  for (int j = 1; j <= v.n; ++j) {
    const auto i = static_cast<std::size_t>(2 * j);
    out.push_back({*step_between(v.shapes[i - 2], v.shapes[i - 1]),
                   *step_between(v.shapes[i - 1], v.shapes[i])});
  }
  return out;
}

PartialMatching phi(const VacillatingTableau& v) {
  const auto moves = moves_of(v);
  Forward walk;
  PartialMatching m;
  for (int j = 1; j <= v.n; ++j) {
    const Move move = moves[static_cast<std::size_t>(j - 1)];
    const bool split = move.splits_vertex();
    const auto i = static_cast<std::size_t>(2 * j);
    // The odd half always acts with j. The even half acts with j' when both
    // halves change the shape and with j otherwise (only NA acts there).
    walk.half_step(move.odd, v.shapes[i - 1], unprimed(j));
    walk.half_step(move.even, v.shapes[i], split ? primed(j) : unprimed(j));
    m.ground.push_back(unprimed(j));
    if (split) m.ground.push_back(primed(j));
  }
  if (!walk.tableau().empty()) {
    throw std::logic_error("phi: tableau not empty after the last step");
  }
  m.pairs = std::move(walk.pairs());
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

VacillatingTableau psi(const PartialMatching& m) {
  // deflate() checks that m is the inflation of a tangled-diagram.
  const int n = deflate(m).n;
  std::map<Label, Label> partner;
  for (const auto& [a, b] : m.pairs) {
    partner[a] = b;
    partner[b] = a;
  }
  const auto split = [&](int v) {
    return std::binary_search(m.ground.begin(), m.ground.end(), primed(v));
  };

  StandardTableau t;
  // A label whose partner lies to its left is a right endpoint: row-insert the
  // partner. A label whose partner lies to its right is a left endpoint: its
  // square is deleted. Unpaired labels leave the tableau alone.
  const auto process = [&](Label x) {
    auto it = partner.find(x);
    if (it == partner.end()) return;
    t = it->second < x ? rsk_insert(t, it->second) : tableau_remove(t, x);
  };

  VacillatingTableau v;
  v.n = n;
  v.shapes.resize(2 * static_cast<std::size_t>(n) + 1);
  for (int j = n; j >= 1; --j) {
    const auto i = static_cast<std::size_t>(2 * j);
    if (split(j)) {
      // Cases IV-VII: the even half handles j', the odd half handles j.
      process(primed(j));
      v.shapes[i - 1] = t.shape();
      process(unprimed(j));
    } else {
      auto it = partner.find(unprimed(j));
      if (it != partner.end() && unprimed(j) < it->second) {
        process(unprimed(j));  // case III: (nothing, add)
        v.shapes[i - 1] = t.shape();
      } else {
        v.shapes[i - 1] = t.shape();  // case I or II: (nothing, nothing),
        process(unprimed(j));         // (remove, nothing)
      }
    }
    v.shapes[i - 2] = t.shape();
  }
  if (!t.empty()) {
    throw std::logic_error("psi: tableau not empty after the first vertex");
  }
  return v;
}

TangledDiagram beta(const VacillatingTableau& v) { return deflate(phi(v)); }

VacillatingTableau beta_inv(const TangledDiagram& d) {
  return psi(inflate(d));
}

}  // namespace tangle
