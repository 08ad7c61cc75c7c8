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

#include "tangle/tangle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace tangle {
namespace {

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.left) + "," + std::to_string(a.right) + ")";
}

void require_valid(const TangledDiagram& d) {
  if (auto violation = validate(d)) {
    throw std::invalid_argument("invalid tangled-diagram: " + *violation);
  }
}

// One arc end sitting at a vertex.
struct End {
  std::size_t arc;
  bool is_left;  // the vertex is this arc's left endpoint
};

int other_end(const Arc& arc, const End& end) {
  return end.is_left ? arc.right : arc.left;
}

using Adjacency = std::vector<std::uint64_t>;

void grow_clique(const Adjacency& adj, int size, std::uint64_t candidates,
                 int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  int v = std::countr_zero(candidates);
  std::uint64_t bit = std::uint64_t{1} << v;
  grow_clique(adj, size + 1, candidates & adj[static_cast<std::size_t>(v)],
              best);
  grow_clique(adj, size, candidates & ~bit, best);
}

template <typename Related>
int max_clique(const PartialMatching& m, Related related) {
  const auto& p = m.pairs;
  if (p.size() > 64) {
    throw std::invalid_argument("max clique search supports at most 64 pairs");
  }
  Adjacency adj(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (related(p[i], p[j])) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  std::uint64_t all =
      p.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.size()) - 1;
  int best = 0;
  grow_clique(adj, 0, all, best);
  return best;
}

// Normalizes both pairs and orders them so that a starts first.
std::pair<LabelPair, LabelPair> ordered(LabelPair a, LabelPair b) {
  if (a.second < a.first) std::swap(a.first, a.second);
  if (b.second < b.first) std::swap(b.first, b.second);
  if (a.first == b.first || a.first == b.second || a.second == b.first ||
      a.second == b.second) {
    throw std::invalid_argument("arcs share the label");
  }
  if (b.first < a.first) std::swap(a, b);
  return {a, b};
}

}  // namespace

const char* to_string(Resolution r) {
  return r == Resolution::crossing ? "crossing" : "nesting";
}

Resolution parse_resolution(const std::string& text) {
  if (text == "crossing") return Resolution::crossing;
  if (text == "nesting") return Resolution::nesting;
  throw std::invalid_argument("unknown resolution '" + text + "'");
}

void TangledDiagram::sort_arcs() { std::sort(arcs.begin(), arcs.end()); }

std::vector<int> TangledDiagram::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  for (const auto& a : arcs) {
    if (a.left < 1 || a.right > n || a.left > a.right) continue;
    ++deg[static_cast<std::size_t>(a.left)];
    ++deg[static_cast<std::size_t>(a.right)];
  }
  return deg;
}

std::optional<std::string> validate(const TangledDiagram& d) {
  if (d.n < 0) return "vertex count is negative";
  for (const auto& a : d.arcs) {
    if (a.left < 1 || a.right > d.n || a.left > a.right) {
      return "arc " + arc_text(a) + " is not 1 <= left <= right <= " +
             std::to_string(d.n);
    }
  }
  auto deg = d.degrees();
  std::vector<bool> has_loop(deg.size(), false);
  for (const auto& a : d.arcs) {
    if (a.is_loop()) has_loop[static_cast<std::size_t>(a.left)] = true;
  }
  for (int v = 1; v <= d.n; ++v) {
    if (deg[static_cast<std::size_t>(v)] > 2) {
      return "vertex " + std::to_string(v) + " has degree " +
             std::to_string(deg[static_cast<std::size_t>(v)]) +
             ", exceeding 2";
    }
  }
  for (int v = 1; v <= d.n; ++v) {
    bool needs = deg[static_cast<std::size_t>(v)] == 2 &&
                 !has_loop[static_cast<std::size_t>(v)];
    if (needs && !d.resolutions.contains(v)) {
      return "vertex " + std::to_string(v) +
             " has two distinct arcs but no resolution";
    }
  }
  for (const auto& [v, r] : d.resolutions) {
    bool needs = v >= 1 && v <= d.n && deg[static_cast<std::size_t>(v)] == 2 &&
                 !has_loop[static_cast<std::size_t>(v)];
    if (!needs) {
      return "vertex " + std::to_string(v) +
             " carries a resolution but is not a degree-2 non-loop vertex";
    }
  }
  for (std::size_t i = 0; i + 1 < d.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < d.arcs.size(); ++j) {
      const Arc& a = d.arcs[i];
      if (a == d.arcs[j] && !a.is_loop() &&
          d.resolutions.at(a.left) != d.resolutions.at(a.right)) {
        return "double arc " + arc_text(a) +
               " has unequal resolutions at its endpoints";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> validate(const PartialMatching& m) {
  for (std::size_t i = 1; i < m.ground.size(); ++i) {
    if (!(m.ground[i - 1] < m.ground[i])) {
      return "ground set is not sorted and duplicate free";
    }
  }
  std::map<Label, int> uses;
  for (const auto& l : m.ground) uses[l] = 0;
  for (const auto& [a, b] : m.pairs) {
    if (!(a < b)) {
      return "pair (" + a.to_string() + "," + b.to_string() +
             ") is not written (smaller, larger)";
    }
    for (Label x : {a, b}) {
      auto it = uses.find(x);
      if (it == uses.end()) {
        return "label " + x.to_string() + " is paired but not in the ground set";
      }
      if (++it->second > 1) {
        return "label " + x.to_string() + " occurs in more than one pair";
      }
    }
  }
  if (!std::is_sorted(m.pairs.begin(), m.pairs.end())) {
    return "pairs are not sorted";
  }
  return std::nullopt;
}

PartialMatching inflate(const TangledDiagram& d) {
  require_valid(d);
  const auto& arcs = d.arcs;
  std::vector<std::vector<End>> ends(static_cast<std::size_t>(d.n) + 1);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    ends[static_cast<std::size_t>(arcs[a].left)].push_back({a, true});
    ends[static_cast<std::size_t>(arcs[a].right)].push_back({a, false});
  }

  std::vector<Label> left_label(arcs.size());
  std::vector<Label> right_label(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    left_label[a] = unprimed(arcs[a].left);
    right_label[a] = unprimed(arcs[a].right);
  }
  auto label_of = [&](const End& e) -> Label& {
    return e.is_left ? left_label[e.arc] : right_label[e.arc];
  };

  PartialMatching m;
  for (int v = 1; v <= d.n; ++v) {
    const auto& at = ends[static_cast<std::size_t>(v)];
    m.ground.push_back(unprimed(v));
    if (at.size() != 2) continue;
    m.ground.push_back(primed(v));

    End e0 = at[0];
    End e1 = at[1];
    if (e0.arc == e1.arc) {  // loop
      right_label[e0.arc] = primed(v);
      continue;
    }
    const bool crossing = d.resolutions.at(v) == Resolution::crossing;
    // The end that keeps the unprimed label v; the other becomes v'.
    End keep = e0;
    if (e0.is_left == e1.is_left) {
      int o0 = other_end(arcs[e0.arc], e0);
      int o1 = other_end(arcs[e1.arc], e1);
      if (o0 == o1) {
        // Double arc: the two copies are interchangeable, so fix copy e0 to
        // take the unprimed left label and let the right end decide.
        keep = (e0.is_left || crossing) ? e0 : e1;
      } else {
        End lower = o0 < o1 ? e0 : e1;
        End upper = o0 < o1 ? e1 : e0;
        keep = crossing ? lower : upper;
      }
    } else {
      End incoming = e0.is_left ? e1 : e0;
      End outgoing = e0.is_left ? e0 : e1;
      keep = crossing ? outgoing : incoming;
    }
    End other = (keep.arc == e0.arc && keep.is_left == e0.is_left) ? e1 : e0;
    label_of(keep) = unprimed(v);
    label_of(other) = primed(v);
  }

  for (std::size_t a = 0; a < arcs.size(); ++a) {
    m.pairs.emplace_back(left_label[a], right_label[a]);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

TangledDiagram deflate(const PartialMatching& m) {
  if (auto violation = validate(m)) {
    throw std::invalid_argument("malformed partial matching: " + *violation);
  }
  int n = 0;
  for (const auto& l : m.ground) {
    if (!l.primed) ++n;
  }
  // Index by 2*vertex + prime.
  auto key = [](Label l) {
    return static_cast<std::size_t>(2 * l.index + (l.primed ? 1 : 0));
  };
  const std::size_t slots = 2 * static_cast<std::size_t>(n) + 2;
  std::vector<bool> present(slots, false);
  std::vector<std::optional<Label>> partner(slots);
  for (const auto& l : m.ground) {
    if (l.index > n) {
      throw std::invalid_argument(
          "malformed partial matching: unprimed labels are not exactly 1.." +
          std::to_string(n));
    }
    present[key(l)] = true;
  }
  for (int v = 1; v <= n; ++v) {
    if (!present[key(unprimed(v))]) {
      throw std::invalid_argument("malformed partial matching: vertex " +
                                  std::to_string(v) + " is missing");
    }
  }
  for (const auto& [a, b] : m.pairs) {
    partner[key(a)] = b;
    partner[key(b)] = a;
  }

  TangledDiagram d;
  d.n = n;
  for (const auto& [a, b] : m.pairs) d.arcs.push_back({a.index, b.index});
  d.sort_arcs();

  for (int v = 1; v <= n; ++v) {
    if (!present[key(primed(v))]) continue;
    auto p = partner[key(unprimed(v))];
    auto q = partner[key(primed(v))];
    if (!p || !q) {
      throw std::invalid_argument("malformed partial matching: split vertex " +
                                  std::to_string(v) + " has an unpaired half");
    }
    if (*p == primed(v)) continue;  // loop
    const int pv = p->index;
    const int qv = q->index;
    bool crossing;
    if (pv == qv) {
      // Double arc: unprimed meets unprimed exactly when crossing.
      crossing = !p->primed;
    } else if ((pv > v) == (qv > v)) {
      crossing = pv < qv;
    } else {
      crossing = pv > v;  // (v,p),(q,v') with q < v < p
    }
    d.resolutions[v] = crossing ? Resolution::crossing : Resolution::nesting;
  }
  if (auto violation = validate(d)) {
    throw std::invalid_argument("partial matching does not deflate: " +
                                *violation);
  }
  return d;
}

bool arcs_cross(LabelPair a, LabelPair b) {
  auto [x, y] = ordered(a, b);
  return x.first < y.first && y.first < x.second && x.second < y.second;
}

bool arcs_nest(LabelPair a, LabelPair b) {
  auto [x, y] = ordered(a, b);
  return x.first < y.first && y.second < x.second;
}

int max_crossing(const PartialMatching& m) { return max_clique(m, arcs_cross); }

int max_nesting(const PartialMatching& m) { return max_clique(m, arcs_nest); }

int crossing_number(const TangledDiagram& d) {
  return max_crossing(inflate(d));
}

int nesting_number(const TangledDiagram& d) { return max_nesting(inflate(d)); }

DiagramClass classify(const TangledDiagram& d) {
  require_valid(d);
  auto deg = d.degrees();
  DiagramClass c{true, true, true};
  for (int v = 1; v <= d.n; ++v) {
    if (deg[static_cast<std::size_t>(v)] != 1) c.perfect_matching = false;
  }
  std::vector<int> incoming(deg.size(), 0);
  std::vector<int> outgoing(deg.size(), 0);
  std::vector<bool> loop(deg.size(), false);
  for (const auto& a : d.arcs) {
    if (a.is_loop()) {
      loop[static_cast<std::size_t>(a.left)] = true;
    } else {
      ++outgoing[static_cast<std::size_t>(a.left)];
      ++incoming[static_cast<std::size_t>(a.right)];
    }
  }
  for (int v = 1; v <= d.n; ++v) {
    auto i = static_cast<std::size_t>(v);
    if (deg[i] != 2) continue;
    bool transit = incoming[i] == 1 && outgoing[i] == 1;
    bool crossing = transit && d.resolutions.at(v) == Resolution::crossing;
    if (!transit || crossing) c.partition = false;
    if (!loop[i] && !crossing) c.braid = false;
  }
  return c;
}

}  // namespace tangle
