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

#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "tangle/bijection.hpp"
#include "tangle/enumerate.hpp"

using namespace tangle;

namespace {

VacillatingTableau V(std::vector<Shape> shapes) {
  return {static_cast<int>(shapes.size() / 2), std::move(shapes)};
}

Label L(const char* text) { return Label::parse(text); }

PartialMatching M(std::vector<const char*> ground,
                  std::vector<std::pair<const char*, const char*>> pairs) {
  PartialMatching m;
  for (const char* g : ground) m.ground.push_back(L(g));
  for (const auto& [a, b] : pairs) m.pairs.emplace_back(L(a), L(b));
  return m;
}

const Shape kEmpty{};

}  // namespace

TEST_CASE("move codes") {
  for (const Move& m : kAllMoves) {
    CHECK(m.legal());
    CHECK(Move::parse(m.code()) == m);
  }
  CHECK_FALSE((Move{Step::add, Step::nothing}).legal());
  CHECK_FALSE((Move{Step::nothing, Step::remove}).legal());
  CHECK_THROWS_AS(Move::parse("AN"), std::invalid_argument);
  CHECK_THROWS_AS(Move::parse("NR"), std::invalid_argument);
  CHECK_THROWS_AS(Move::parse("X"), std::invalid_argument);
  CHECK(moves::RA.code() == "RA");
}

TEST_CASE("moves_of") {
  CHECK(moves_of(V({kEmpty, kEmpty, kEmpty})) == std::vector<Move>{moves::NN});
  CHECK(moves_of(V({kEmpty, Shape{1}, kEmpty})) ==
        std::vector<Move>{moves::AR});
  CHECK(moves_of(V({kEmpty, kEmpty, Shape{1}, kEmpty, kEmpty})) ==
        std::vector<Move>{moves::NA, moves::RN});
  // (add, nothing) is not a move.
  CHECK_THROWS_AS(moves_of(V({kEmpty, Shape{1}, Shape{1}, kEmpty, kEmpty})),
                  std::invalid_argument);
  // Final shape must be empty.
  CHECK_THROWS_AS(moves_of(V({kEmpty, kEmpty, Shape{1}})),
                  std::invalid_argument);
  // Two squares in one half-step.
  CHECK_THROWS_AS(moves_of(V({kEmpty, Shape{2}, kEmpty})),
                  std::invalid_argument);
  CHECK_THROWS_AS(moves_of(VacillatingTableau{2, {kEmpty, kEmpty, kEmpty}}),
                  std::invalid_argument);
}

TEST_CASE("phi examples") {
  CHECK(phi(V({kEmpty, kEmpty, kEmpty})) == M({"1"}, {}));
  CHECK(phi(V({kEmpty, Shape{1}, kEmpty})) == M({"1", "1'"}, {{"1", "1'"}}));
  CHECK(phi(V({kEmpty, kEmpty, Shape{1}, kEmpty, kEmpty})) ==
        M({"1", "2"}, {{"1", "2"}}));
}

TEST_CASE("psi examples") {
  CHECK(psi(M({"1"}, {})) == V({kEmpty, kEmpty, kEmpty}));
  CHECK(psi(M({"1", "1'"}, {{"1", "1'"}})) == V({kEmpty, Shape{1}, kEmpty}));
  CHECK(psi(M({"1", "2"}, {{"1", "2"}})) ==
        V({kEmpty, kEmpty, Shape{1}, kEmpty, kEmpty}));
  CHECK_THROWS_AS(psi(M({"1", "1'"}, {})), std::invalid_argument);
}

TEST_CASE("psi follows the seven vertex cases") {
  // One diagram per case, each checked against the move at its vertex.
  struct Case {
    PartialMatching inflation;
    std::vector<Move> moves;
  };
  const std::vector<Case> cases = {
      // I, II, III: isolated, right end, left end.
      {M({"1", "2", "3"}, {{"1", "3"}}), {moves::NA, moves::NN, moves::RN}},
      // IV: transit noncrossing (1,2),(2',3).
      {M({"1", "2", "2'", "3"}, {{"1", "2"}, {"2'", "3"}}),
       {moves::NA, moves::RA, moves::RN}},
      // V: right end of degree 2, (1,3),(2,3').
      {M({"1", "2", "3", "3'"}, {{"1", "3"}, {"2", "3'"}}),
       {moves::NA, moves::NA, moves::RR}},
      // VI: left end of degree 2, (1,2),(1',3).
      {M({"1", "1'", "2", "3"}, {{"1", "2"}, {"1'", "3"}}),
       {moves::AA, moves::RN, moves::RN}},
      // VII: transit crossing (1,2'),(2,3) and a loop.
      {M({"1", "2", "2'", "3"}, {{"1", "2'"}, {"2", "3"}}),
       {moves::NA, moves::AR, moves::RN}},
      {M({"1", "1'"}, {{"1", "1'"}}), {moves::AR}},
  };
  for (const auto& c : cases) {
    auto v = psi(c.inflation);
    CHECK(moves_of(v) == c.moves);
    CHECK(phi(v) == c.inflation);
  }
}

TEST_CASE("beta examples") {
  CHECK(beta(V({kEmpty, Shape{1}, kEmpty})) ==
        TangledDiagram{1, {{1, 1}}, {}});
  auto isolated = beta_inv(TangledDiagram{3, {}, {}});
  CHECK(moves_of(isolated) ==
        std::vector<Move>{moves::NN, moves::NN, moves::NN});
}

TEST_CASE("allowed_moves") {
  CHECK(allowed_moves(DiagramKind::matching) == MoveSet{moves::RN, moves::NA});
  CHECK(allowed_moves(DiagramKind::partition) ==
        MoveSet{moves::RN, moves::NA, moves::NN, moves::RA});
  CHECK(allowed_moves(DiagramKind::braid) ==
        MoveSet{moves::RN, moves::NA, moves::NN, moves::AR});
}

TEST_CASE("phi and psi are mutually inverse for n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    long long tableaux = 0;
    gen_vt(n, std::nullopt, all_moves(), [&](const VacillatingTableau& v) {
      ++tableaux;
      auto m = phi(v);  // throws on an unsound insertion or extraction
      REQUIRE(psi(m) == v);
      REQUIRE(beta_inv(beta(v)) == v);
    });
    long long diagrams = 0;
    gen_tangled(n, [&](const TangledDiagram& d) {
      ++diagrams;
      auto m = inflate(d);
      REQUIRE(phi(psi(m)) == m);
      REQUIRE(beta(beta_inv(d)) == d);
    });
    CHECK(tableaux == diagrams);
  }
}

TEST_CASE("max rows of beta_inv(d) equals the crossing number for n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    gen_tangled(n, [&](const TangledDiagram& d) {
      int rows = beta_inv(d).max_rows();
      REQUIRE(rows == oracle::brute_max_crossing(inflate(d)));
      for (int k = 2; k <= 5; ++k) {
        REQUIRE((crossing_number(d) < k) == (rows < k));
      }
    });
  }
}

TEST_CASE("k-noncrossing and k-nonnesting diagrams are equinumerous") {
  for (int n = 0; n <= 5; ++n) {
    std::map<int, long long> crossing, nesting;
    gen_tangled(n, [&](const TangledDiagram& d) {
      ++crossing[crossing_number(d)];
      ++nesting[nesting_number(d)];
    });
    CHECK(crossing == nesting);
  }
}

TEST_CASE("restricted move sets correspond to diagram classes for n <= 4") {
  for (DiagramKind kind :
       {DiagramKind::matching, DiagramKind::partition, DiagramKind::braid}) {
    CAPTURE(to_string(kind));
    const auto allowed = allowed_moves(kind);
    for (int n = 0; n <= 4; ++n) {
      gen_vt(n, std::nullopt, allowed, [&](const VacillatingTableau& v) {
        REQUIRE(has_kind(classify(beta(v)), kind));
      });
      gen_tangled(n, [&](const TangledDiagram& d) {
        auto ms = moves_of(beta_inv(d));
        bool uses_allowed = std::all_of(ms.begin(), ms.end(), [&](Move m) {
          return allowed.contains(m);
        });
        REQUIRE(uses_allowed == has_kind(classify(d), kind));
      });
    }
  }
}
