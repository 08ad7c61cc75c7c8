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

#include "tangle/enumerate.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tangle {
namespace {

void check_bound(const char* what, int n, int bound) {
  if (n < 0 || n > bound) {
    throw std::invalid_argument(std::string(what) + ": n = " +
                                std::to_string(n) + " is outside [0, " +
                                std::to_string(bound) + "]");
  }
}

void check_k(int k) {
  if (k < 2) {
    throw std::invalid_argument("k must be at least 2, got " +
                                std::to_string(k));
  }
}

class DiagramWalker {
 public:
  DiagramWalker(int n, const DiagramSink& sink) : sink_(sink) {
    diagram_.n = n;
    degree_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int l = 1; l <= n; ++l) {
      for (int r = l; r <= n; ++r) candidates_.push_back({l, r});
    }
  }

  void run() { extend(0); }

 private:
  int& deg(int v) { return degree_[static_cast<std::size_t>(v)]; }

  void extend(std::size_t first) {
    emit_resolutions();
    for (std::size_t c = first; c < candidates_.size(); ++c) {
      const Arc a = candidates_[c];
      bool fits = a.is_loop() ? deg(a.left) == 0
                              : deg(a.left) < 2 && deg(a.right) < 2;
      if (!fits) continue;
      ++deg(a.left);
      ++deg(a.right);
      diagram_.arcs.push_back(a);
      extend(c);  // same index again: double arcs
      diagram_.arcs.pop_back();
      --deg(a.left);
      --deg(a.right);
    }
  }

  // Binary counter over the free vertices, the lowest vertex most significant.
  // The right end of a double arc copies its left end.
  void emit_resolutions() {
    std::vector<int> free;
    std::vector<std::pair<int, int>> tied;  // (right end, left end)
    std::vector<bool> loop(degree_.size(), false);
    for (std::size_t i = 0; i < diagram_.arcs.size(); ++i) {
      const Arc& a = diagram_.arcs[i];
      if (a.is_loop()) loop[static_cast<std::size_t>(a.left)] = true;
      if (i > 0 && diagram_.arcs[i - 1] == a && !a.is_loop()) {
        tied.emplace_back(a.right, a.left);
      }
    }
    for (int v = 1; v <= diagram_.n; ++v) {
      if (deg(v) != 2 || loop[static_cast<std::size_t>(v)]) continue;
      bool copies = std::any_of(tied.begin(), tied.end(),
                                [v](const auto& t) { return t.first == v; });
      if (!copies) free.push_back(v);
    }
    const std::size_t total = std::size_t{1} << free.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
      diagram_.resolutions.clear();
      for (std::size_t b = 0; b < free.size(); ++b) {
        bool nesting = (mask >> (free.size() - 1 - b)) & 1;
        diagram_.resolutions[free[b]] =
            nesting ? Resolution::nesting : Resolution::crossing;
      }
      for (const auto& [right, left] : tied) {
        diagram_.resolutions[right] = diagram_.resolutions[left];
      }
      sink_(diagram_);
    }
    diagram_.resolutions.clear();
  }

  const DiagramSink& sink_;
  TangledDiagram diagram_;
  std::vector<int> degree_;
  std::vector<Arc> candidates_;
};

std::vector<Shape> half_step_targets(const Shape& from, Step step,
                                     std::optional<int> max_rows) {
  std::vector<Shape> out;
  switch (step) {
    case Step::nothing:
      out.push_back(from);
      break;
    case Step::add:
      for (auto& e : shape_extensions(from)) {
        if (!max_rows || e.shape.num_rows() <= *max_rows) {
          out.push_back(std::move(e.shape));
        }
      }
      break;
    case Step::remove:
      for (auto& c : shape_corners(from)) out.push_back(std::move(c.shape));
      break;
  }
  return out;
}

int removals(const Move& m) {
  return (m.odd == Step::remove ? 1 : 0) + (m.even == Step::remove ? 1 : 0);
}

class TableauWalker {
 public:
  TableauWalker(int n, std::optional<int> max_rows, const MoveSet& allowed,
                const TableauSink& sink)
      : max_rows_(max_rows), sink_(sink) {
    for (const Move& m : kAllMoves) {
      if (allowed.contains(m)) {
        moves_.push_back(m);
        max_removals_ = std::max(max_removals_, removals(m));
      }
    }
    tableau_.n = n;
    tableau_.shapes.assign(1, Shape{});
  }

  void run() { extend(1); }

 private:
  void extend(int j) {
    const int n = tableau_.n;
    if (j > n) {
      sink_(tableau_);
      return;
    }
    const Shape current = tableau_.shapes.back();
    const int reachable = max_removals_ * (n - j);
    for (const Move& m : moves_) {
      for (const Shape& middle : half_step_targets(current, m.odd, max_rows_)) {
        for (const Shape& next : half_step_targets(middle, m.even, max_rows_)) {
          if (next.size() > reachable) continue;
          tableau_.shapes.push_back(middle);
          tableau_.shapes.push_back(next);
          extend(j + 1);
          tableau_.shapes.pop_back();
          tableau_.shapes.pop_back();
        }
      }
    }
  }

  std::optional<int> max_rows_;
  const TableauSink& sink_;
  std::vector<Move> moves_;
  int max_removals_ = 0;
  VacillatingTableau tableau_;
};

using ShapeCounts = std::map<Shape, Count>;

// Sum of binom(n, l) * g(l) for l = 0..n.
template <typename Term>
Count binomial_sum(int n, Term g) {
  Count total = 0;
  for (int l = 0; l <= n; ++l) total += binomial(n, l) * g(l);
  return total;
}

Count no_isolated_from(const std::vector<Count>& f, int n) {
  return binomial_sum(n, [&](int l) {
    return f[static_cast<std::size_t>(2 * n - l)];
  });
}

}  // namespace

void gen_tangled(int n, const DiagramSink& sink, int bound) {
  check_bound("gen_tangled", n, bound);
  DiagramWalker(n, sink).run();
}

void gen_vt(int n, std::optional<int> max_rows, const MoveSet& allowed,
            const TableauSink& sink, int bound) {
  check_bound("gen_vt", n, bound);
  TableauWalker(n, max_rows, allowed, sink).run();
}

Count catalan(int m) {
  if (m < 0) throw std::invalid_argument("catalan: negative index");
  // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step.
  Count c = 1;
  for (int i = 0; i < m; ++i) c = c * (2 * (2 * i + 1)) / (i + 2);
  return c;
}

Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::vector<Count> matching_counts(int k, int max_points) {
  check_k(k);
  if (max_points < 0) throw std::invalid_argument("negative point count");
  std::vector<Count> f(static_cast<std::size_t>(max_points) + 1, 0);
  ShapeCounts walks{{Shape{}, 1}};
  f[0] = 1;
  for (int t = 1; t <= max_points; ++t) {
    ShapeCounts next;
    const int reachable = max_points - t;
    for (const auto& [shape, ways] : walks) {
      for (const auto& c : shape_corners(shape)) next[c.shape] += ways;
      if (shape.size() + 1 > reachable) continue;
      for (const auto& e : shape_extensions(shape)) {
        if (e.shape.num_rows() < k) next[e.shape] += ways;
      }
    }
    walks = std::move(next);
    if (auto it = walks.find(Shape{}); it != walks.end()) {
      f[static_cast<std::size_t>(t)] = it->second;
    }
  }
  return f;
}

Count count_matchings(int k, int m) {
  check_k(k);
  if (m < 0) throw std::invalid_argument("negative point count");
  if (m % 2) return 0;
  return matching_counts(k, m).back();
}

Count f3_closed_form(int m) {
  if (m < 0 || m % 2) {
    throw std::invalid_argument("f3_closed_form: m must be even and >= 0, got " +
                                std::to_string(m));
  }
  const int h = m / 2;
  const Count mid = catalan(h + 1);
  return catalan(h) * catalan(h + 2) - mid * mid;
}

Count count_no_isolated(int k, int n) {
  check_k(k);
  if (n < 0) throw std::invalid_argument("negative vertex count");
  return no_isolated_from(matching_counts(k, 2 * n), n);
}

Count count_all(int k, int n) {
  check_k(k);
  if (n < 0) throw std::invalid_argument("negative vertex count");
  const auto f = matching_counts(k, 2 * n);
  return binomial_sum(n, [&](int i) { return no_isolated_from(f, n - i); });
}

Count count_by_vt(int k, int n, bool allow_isolated) {
  check_k(k);
  if (n < 0) throw std::invalid_argument("negative vertex count");
  const std::optional<int> max_rows = k - 1;
  ShapeCounts walks{{Shape{}, 1}};
  for (int j = 1; j <= n; ++j) {
    ShapeCounts next;
    const int reachable = 2 * (n - j);
    for (const auto& [shape, ways] : walks) {
      for (const Move& m : kAllMoves) {
        if (!allow_isolated && m == moves::NN) continue;
        for (const Shape& middle : half_step_targets(shape, m.odd, max_rows)) {
          for (const Shape& last : half_step_targets(middle, m.even, max_rows)) {
            if (last.size() <= reachable) next[last] += ways;
          }
        }
      }
    }
    walks = std::move(next);
  }
  auto it = walks.find(Shape{});
  return it == walks.end() ? Count{0} : it->second;
}

std::string SequenceTable::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << start + static_cast<int>(i) << ',' << terms[i] << '\n';
  }
  return out.str();
}

std::string SequenceTable::to_json() const {
  std::ostringstream out;
  out << "{\"name\":\"" << name << "\",\"start\":" << start << ",\"terms\":[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << ',';
    out << "{\"count\":" << terms[i]
        << ",\"n\":" << start + static_cast<int>(i) << '}';
  }
  out << "]}\n";
  return out.str();
}

SequenceTable tangled_table(int k, int max_n) {
  check_k(k);
  SequenceTable table;
  table.name = "tangled_diagrams_k" + std::to_string(k);
  table.start = 1;
  if (max_n < 1) return table;
  const auto f = matching_counts(k, 2 * max_n);
  for (int n = 1; n <= max_n; ++n) {
    table.terms.push_back(
        binomial_sum(n, [&](int i) { return no_isolated_from(f, n - i); }));
  }
  return table;
}

SequenceTable paper_table() { return tangled_table(3, 10); }

}  // namespace tangle
