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

// Brute-force oracles for the test suites. Nothing here calls the code under
// test except to wrap results in library value types.

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tangle/tangle.hpp"
#include "tangle/young.hpp"

namespace tangle::oracle {

// Labels 1 < 1' < 2 < ... < m < m' for m = ceil(size / 2), truncated to size.
inline std::vector<Label> primed_alphabet(int size) {
  std::vector<Label> out;
  for (int i = 1; static_cast<int>(out.size()) < size; ++i) {
    out.push_back(unprimed(i));
    if (static_cast<int>(out.size()) < size) out.push_back(primed(i));
  }
  return out;
}

// Every standard filling of every shape of size `size` with 0..size-1,
// built by placing each next value at an outer corner.
inline void standard_fillings(
    int size, const std::function<void(const std::vector<std::vector<int>>&)>&
                  sink) {
  std::vector<std::vector<int>> rows;
  std::function<void(int)> place = [&](int value) {
    if (value == size) {
      sink(rows);
      return;
    }
    for (std::size_t r = 0; r <= rows.size(); ++r) {
      std::size_t len = r < rows.size() ? rows[r].size() : 0;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      if (r == rows.size()) rows.emplace_back();
      rows[r].push_back(value);
      place(value + 1);
      rows[r].pop_back();
      if (rows[r].empty()) rows.pop_back();
    }
  };
  place(0);
}

// Every standard tableau with at most max_entries entries drawn from
// `alphabet`.
inline std::vector<StandardTableau> all_tableaux(
    const std::vector<Label>& alphabet, int max_entries) {
  std::vector<StandardTableau> out;
  const int a = static_cast<int>(alphabet.size());
  for (std::uint32_t subset = 0; subset < (1u << a); ++subset) {
    std::vector<Label> chosen;
    for (int i = 0; i < a; ++i) {
      if (subset >> i & 1u) chosen.push_back(alphabet[static_cast<std::size_t>(i)]);
    }
    if (static_cast<int>(chosen.size()) > max_entries) continue;
    standard_fillings(static_cast<int>(chosen.size()), [&](const auto& rows) {
      StandardTableau::Rows filled;
      for (const auto& row : rows) {
        auto& f = filled.emplace_back();
        for (int v : row) f.push_back(chosen[static_cast<std::size_t>(v)]);
      }
      out.emplace_back(std::move(filled));
    });
  }
  return out;
}

inline bool crossing_pair(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

inline bool nesting_pair(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.second < a.second) ||
         (b.first < a.first && a.second < b.second);
}

// Largest pairwise-related subset by trying all subsets.
template <typename Related>
int max_related_subset(const std::vector<std::pair<int, int>>& arcs,
                       Related related) {
  int best = 0;
  const std::size_t n = arcs.size();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    int size = 0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(s >> i & 1u)) continue;
      ++size;
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if (s >> j & 1u) ok = related(arcs[i], arcs[j]);
      }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Labels as integers 2*index + prime, which preserves their order.
inline std::vector<std::pair<int, int>> as_int_pairs(const PartialMatching& m) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : m.pairs) {
    out.emplace_back(2 * a.index + a.primed, 2 * b.index + b.primed);
  }
  return out;
}

inline int brute_max_crossing(const PartialMatching& m) {
  return max_related_subset(as_int_pairs(m), crossing_pair);
}

inline int brute_max_nesting(const PartialMatching& m) {
  return max_related_subset(as_int_pairs(m), nesting_pair);
}

// Every perfect matching on points 0..m-1.
inline void perfect_matchings(
    int m,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& sink) {
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  std::vector<std::pair<int, int>> arcs;
  std::function<void()> go = [&] {
    int first = 0;
    while (first < m && used[static_cast<std::size_t>(first)]) ++first;
    if (first == m) {
      sink(arcs);
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int j = first + 1; j < m; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      arcs.emplace_back(first, j);
      go();
      arcs.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  if (m % 2 == 0) go();
}

inline long long brute_matchings(int k, int m) {
  long long count = 0;
  perfect_matchings(m, [&](const auto& arcs) {
    if (max_related_subset(arcs, crossing_pair) < k) ++count;
  });
  return count;
}

// Number of set partitions of n elements, by enumerating restricted growth
// strings.
inline long long brute_set_partitions(int n) {
  long long count = 0;
  std::function<void(int, int)> go = [&](int i, int blocks) {
    if (i == n) {
      ++count;
      return;
    }
    for (int b = 0; b <= blocks; ++b) go(i + 1, std::max(blocks, b + 1));
  };
  go(0, 0);
  return count;
}

inline long long double_factorial_odd(int points) {
  if (points % 2) return 0;
  long long r = 1;
  for (int i = points - 1; i > 1; i -= 2) r *= i;
  return r;
}

// Catalan numbers from C_{m+1} = sum_i C_i C_{m-i}.
inline std::vector<long long> catalan_convolution(int max_m) {
  std::vector<long long> c{1};
  for (int m = 0; m < max_m; ++m) {
    long long next = 0;
    for (int i = 0; i <= m; ++i) {
      next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - i)];
    }
    c.push_back(next);
  }
  return c;
}

}  // namespace tangle::oracle
