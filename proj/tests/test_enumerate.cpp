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
#include "tangle/enumerate.hpp"
#include "tangle/json_io.hpp"

using namespace tangle;

namespace {

long long brute_count(int k, int n, bool allow_isolated = true) {
  long long count = 0;
  gen_tangled(n, [&](const TangledDiagram& d) {
    if (crossing_number(d) >= k) return;
    if (!allow_isolated) {
      auto deg = d.degrees();
      for (int v = 1; v <= n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 0) return;
      }
    }
    ++count;
  });
  return count;
}

// Counts computed once by an independent Python enumeration of tangled
// diagrams, index n = 0, 1, ...
const std::map<int, std::vector<long long>> kFrozenAll = {
    {2, {1, 2, 6, 24, 113, 583}},
    {3, {1, 2, 7, 39, 292, 2635}},
    {4, {1, 2, 7, 40, 322, 3295}},
};

}  // namespace

TEST_CASE("gen_tangled small cases") {
  const int expected[] = {1, 2, 7};
  for (int n = 0; n <= 2; ++n) {
    int count = 0;
    gen_tangled(n, [&](const TangledDiagram&) { ++count; });
    CHECK(count == expected[n]);
  }
  CHECK_THROWS_AS(gen_tangled(7, [](const TangledDiagram&) {}),
                  std::invalid_argument);
  CHECK_NOTHROW(gen_tangled(0, [](const TangledDiagram&) {}, 0));
}

TEST_CASE("gen_tangled is deterministic and canonical") {
  std::vector<std::string> first, second;
  gen_tangled(3, [&](const TangledDiagram& d) {
    first.push_back(to_json(d).dump());
  });
  gen_tangled(3, [&](const TangledDiagram& d) {
    second.push_back(to_json(d).dump());
  });
  CHECK(first == second);
  CHECK(std::set<std::string>(first.begin(), first.end()).size() ==
        first.size());
  // Empty diagram comes first.
  CHECK(first.front() == R"({"arcs":[],"n":3,"resolutions":{}})");
}

TEST_CASE("gen_vt small cases") {
  int count = 0;
  gen_vt(1, std::nullopt, all_moves(),
         [&](const VacillatingTableau&) { ++count; });
  CHECK(count == 2);

  count = 0;
  gen_vt(2, 2, all_moves(), [&](const VacillatingTableau&) { ++count; });
  CHECK(count == 7);

  count = 0;
  gen_vt(2, 1, all_moves(), [&](const VacillatingTableau& v) {
    CHECK(v.max_rows() <= 1);
    ++count;
  });
  CHECK(count == 6);  // all but the crossing double arc

  count = 0;
  gen_vt(2, std::nullopt, allowed_moves(DiagramKind::matching),
         [&](const VacillatingTableau&) { ++count; });
  CHECK(count == 1);
  CHECK_THROWS_AS(
      gen_vt(9, std::nullopt, all_moves(), [](const VacillatingTableau&) {}),
      std::invalid_argument);
}

TEST_CASE("catalan") {
  auto oracle = oracle::catalan_convolution(20);
  for (int m = 0; m <= 20; ++m) {
    CHECK(catalan(m) == Count(oracle[static_cast<std::size_t>(m)]));
  }
  CHECK(catalan(4) == 14);
  CHECK(catalan(5) == 42);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("count_matchings") {
  CHECK(count_matchings(3, 2) == 1);
  CHECK(count_matchings(3, 4) == 3);
  CHECK(count_matchings(3, 6) == 14);
  CHECK(count_matchings(2, 6) == 5);
  CHECK(count_matchings(3, 5) == 0);
  CHECK(count_matchings(3, 0) == 1);
  CHECK_THROWS_AS(count_matchings(1, 2), std::invalid_argument);
}

TEST_CASE("count_matchings agrees with brute force") {
  for (int k = 2; k <= 5; ++k) {
    for (int m = 0; m <= 10; ++m) {
      CAPTURE(k);
      CAPTURE(m);
      CHECK(count_matchings(k, m) == Count(oracle::brute_matchings(k, m)));
    }
  }
}

TEST_CASE("2-noncrossing matchings are Catalan") {
  for (int m = 0; m <= 30; m += 2) {
    CHECK(count_matchings(2, m) == catalan(m / 2));
  }
}

TEST_CASE("f3_closed_form") {
  CHECK(f3_closed_form(0) == 1);
  CHECK(f3_closed_form(2) == 1);
  CHECK(f3_closed_form(4) == 3);
  CHECK(f3_closed_form(8) == 84);
  CHECK(f3_closed_form(10) == 594);
  CHECK_THROWS_AS(f3_closed_form(3), std::invalid_argument);
  for (int m = 0; m <= 40; m += 2) {
    CHECK(f3_closed_form(m) == count_matchings(3, m));
  }
}

TEST_CASE("count_no_isolated and count_all") {
  CHECK(count_no_isolated(3, 0) == 1);
  CHECK(count_no_isolated(3, 1) == 1);
  CHECK(count_no_isolated(3, 2) == 4);
  CHECK(count_all(3, 1) == 2);
  CHECK(count_all(3, 4) == 292);
  CHECK(count_all(3, 10) == 629772754);
}

TEST_CASE("count_by_vt") {
  CHECK(count_by_vt(3, 2) == 7);
  CHECK(count_by_vt(3, 5) == 2635);
  CHECK(count_by_vt(3, 2, false) == 4);
}

TEST_CASE("formula, vacillating DP and brute force agree") {
  for (int k = 2; k <= 5; ++k) {
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      Count formula = count_all(k, n);
      CHECK(formula == count_by_vt(k, n));
      CHECK(formula == Count(brute_count(k, n)));
      Count no_iso = count_no_isolated(k, n);
      CHECK(no_iso == count_by_vt(k, n, false));
      CHECK(no_iso == Count(brute_count(k, n, false)));
    }
    for (int n = 6; n <= 12; ++n) {
      CHECK(count_all(k, n) == count_by_vt(k, n));
      CHECK(count_no_isolated(k, n) == count_by_vt(k, n, false));
    }
  }
}

TEST_CASE("brute force matches independently computed counts") {
  for (const auto& [k, terms] : kFrozenAll) {
    for (std::size_t n = 0; n < terms.size(); ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(brute_count(k, static_cast<int>(n)) == terms[n]);
    }
  }
}

TEST_CASE("paper_table") {
  const std::vector<long long> expected = {
      2, 7, 39, 292, 2635, 27019, 304162, 3677313, 47036624, 629772754};
  auto table = paper_table();
  CHECK(table.name == "tangled_diagrams_k3");
  CHECK(table.start == 1);
  REQUIRE(table.terms.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(table.terms[i] == Count(expected[i]));
  }
  CHECK(tangled_table(3, 1).to_csv() == "1,2\n");
  CHECK(tangled_table(2, 2).to_json() ==
        R"({"name":"tangled_diagrams_k2","start":1,"terms":[{"count":2,"n":1},{"count":6,"n":2}]})"
        "\n");
}

TEST_CASE("restricted move sets count classical objects") {
  for (int n = 0; n <= 6; ++n) {
    long long partitions = 0;
    gen_vt(n, std::nullopt, allowed_moves(DiagramKind::partition),
           [&](const VacillatingTableau&) { ++partitions; });
    CHECK(partitions == oracle::brute_set_partitions(n));
  }
  for (int n = 0; n <= 8; n += 1) {
    long long matchings = 0;
    gen_vt(n, std::nullopt, allowed_moves(DiagramKind::matching),
           [&](const VacillatingTableau&) { ++matchings; });
    CHECK(matchings == oracle::double_factorial_odd(n));
  }
  const long long braids[] = {1, 2, 5, 15, 52};
  for (int n = 0; n <= 4; ++n) {
    long long count = 0;
    gen_tangled(n, [&](const TangledDiagram& d) {
      if (classify(d).braid) ++count;
    });
    CHECK(count == braids[n]);
  }
}
