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

#include "tangle/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tangle/enumerate.hpp"
#include "tangle/json_io.hpp"

namespace tangle {
namespace {

Json as_json(const Json& j) { return j; }

template <typename T>
Json as_json(const T& x) {
  return to_json(x);
}

// Tallies one property over many inputs, keeping the first failure.
class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  template <typename Input>
  void check(bool ok, const Input& input) {
    ++checked_;
    if (ok || !result_.passed) {
      if (!ok) ++failures_;
      return;
    }
    ++failures_;
    result_.passed = false;
    result_.counterexample = as_json(input).dump();
  }

  // Runs `body` and records an exception as a failure on `input`.
  template <typename Input, typename Body>
  void guard(const Input& input, Body body) {
    try {
      check(body(), input);
    } catch (const std::exception& e) {
      check(false, input);
      if (result_.detail.empty()) result_.detail = e.what();
    }
  }

  void fail(std::string detail) {
    result_.passed = false;
    result_.detail = std::move(detail);
  }

  PropertyResult finish(const std::string& scope) {
    std::ostringstream detail;
    detail << scope << ", " << checked_ << " checked";
    if (failures_) detail << ", " << failures_ << " failed";
    if (!result_.detail.empty()) detail << ": " << result_.detail;
    result_.detail = detail.str();
    return result_;
  }

 private:
  PropertyResult result_;
  long long checked_ = 0;
  long long failures_ = 0;
};

std::string scope(int n) { return "n<=" + std::to_string(n); }

// Number of diagrams on [n] per crossing number and per nesting number.
struct Histograms {
  std::map<int, long long> crossing;
  std::map<int, long long> nesting;

  long long below(const std::map<int, long long>& h, int k) const {
    long long total = 0;
    for (const auto& [c, count] : h) {
      if (c < k) total += count;
    }
    return total;
  }
};

Histograms histograms(int n, int bound) {
  Histograms h;
  gen_tangled(
      n,
      [&](const TangledDiagram& d) {
        auto m = inflate(d);
        ++h.crossing[max_crossing(m)];
        ++h.nesting[max_nesting(m)];
      },
      bound);
  return h;
}

// Bell numbers from the Bell triangle.
Count bell(int n) {
  std::vector<Count> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Count> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

Count double_factorial_odd(int points) {
  if (points % 2) return 0;
  Count r = 1;
  for (int i = points - 1; i > 1; i -= 2) r *= i;
  return r;
}

std::vector<PropertyResult> roundtrip_suite(int n, int bound) {
  Property inflation("deflate(inflate(d)) = d");
  Property forward("beta(beta_inv(d)) = d");
  Property backward("beta_inv(beta(v)) = v");
  Property sizes("#diagrams = #vacillating tableaux");
  for (int m = 0; m <= n; ++m) {
    long long diagrams = 0;
    gen_tangled(
        m,
        [&](const TangledDiagram& d) {
          ++diagrams;
          inflation.guard(d, [&] { return deflate(inflate(d)) == d; });
          forward.guard(d, [&] { return beta(beta_inv(d)) == d; });
        },
        bound);
    long long tableaux = 0;
    gen_vt(
        m, std::nullopt, all_moves(),
        [&](const VacillatingTableau& v) {
          ++tableaux;
          backward.guard(v, [&] { return beta_inv(beta(v)) == v; });
        },
        bound);
    if (diagrams != tableaux) {
      sizes.fail("n=" + std::to_string(m) + ": " + std::to_string(diagrams) +
                 " diagrams vs " + std::to_string(tableaux) + " tableaux");
    }
    sizes.check(diagrams == tableaux, Json(m));
  }
  return {inflation.finish(scope(n)), forward.finish(scope(n)),
          backward.finish(scope(n)), sizes.finish(scope(n))};
}

std::vector<PropertyResult> theorem2_suite(int n, int bound) {
  Property rows("max rows of beta_inv(d) = crossing_number(d)");
  Property image("beta maps tableaux with < k rows to k-noncrossing diagrams");
  for (int m = 0; m <= n; ++m) {
    gen_tangled(
        m,
        [&](const TangledDiagram& d) {
          rows.guard(d, [&] {
            return beta_inv(d).max_rows() == crossing_number(d);
          });
        },
        bound);
    gen_vt(
        m, std::nullopt, all_moves(),
        [&](const VacillatingTableau& v) {
          image.guard(v, [&] {
            return crossing_number(beta(v)) == v.max_rows();
          });
        },
        bound);
  }
  return {rows.finish(scope(n)), image.finish(scope(n))};
}

std::vector<PropertyResult> duality_suite(int n, int bound) {
  Property dual("#{crossing_number < k} = #{nesting_number < k}");
  std::ostringstream summary;
  for (int m = 0; m <= n; ++m) {
    auto h = histograms(m, bound);
    int top = std::max(h.crossing.rbegin()->first, h.nesting.rbegin()->first);
    for (int k = 1; k <= top + 1; ++k) {
      auto c = h.below(h.crossing, k);
      auto s = h.below(h.nesting, k);
      dual.check(c == s, Json{{"k", k}, {"n", m}});
      if (m == n && k >= 2) {
        summary << (k > 2 ? " " : "") << "k=" << k << ":" << c;
      }
    }
  }
  auto result = dual.finish(scope(n));
  result.detail += " [n=" + std::to_string(n) + " " + summary.str() + "]";
  return {result};
}

std::vector<PropertyResult> corollary_suite(int n, int bound) {
  std::vector<PropertyResult> out;
  for (DiagramKind kind :
       {DiagramKind::matching, DiagramKind::partition, DiagramKind::braid}) {
    const std::string name = to_string(kind);
    const MoveSet allowed = allowed_moves(kind);
    Property count("#" + name + " tableaux = #" + name + " diagrams");
    Property image("beta(" + name + " tableau) is a " + name);
    Property preimage("beta_inv(" + name + ") uses only " + name + " moves");
    for (int m = 0; m <= n; ++m) {
      long long tableaux = 0;
      gen_vt(
          m, std::nullopt, allowed,
          [&](const VacillatingTableau& v) {
            ++tableaux;
            image.guard(v, [&] { return has_kind(classify(beta(v)), kind); });
          },
          bound);
      long long diagrams = 0;
      gen_tangled(
          m,
          [&](const TangledDiagram& d) {
            if (!has_kind(classify(d), kind)) return;
            ++diagrams;
            preimage.guard(d, [&] {
              auto ms = moves_of(beta_inv(d));
              return std::all_of(ms.begin(), ms.end(), [&](const Move& mv) {
                return allowed.contains(mv);
              });
            });
          },
          bound);
      Count expected = diagrams;
      if (kind == DiagramKind::matching) expected = double_factorial_odd(m);
      if (kind == DiagramKind::partition) expected = bell(m);
      bool ok = Count(tableaux) == expected && Count(diagrams) == expected;
      if (!ok) {
        std::ostringstream why;
        why << "n=" << m << ": " << tableaux << " tableaux, " << diagrams
            << " diagrams, expected " << expected;
        count.fail(why.str());
      }
      count.check(ok, Json(m));
    }
    out.push_back(count.finish(scope(n)));
    out.push_back(image.finish(scope(n)));
    out.push_back(preimage.finish(scope(n)));
  }
  return out;
}

std::vector<PropertyResult> counts_suite(int n, int bound) {
  Property all("formula = vt-dp = brute (all diagrams)");
  Property bare("formula = vt-dp = brute (no isolated vertices)");
  std::ostringstream summary;
  for (int m = 0; m <= n; ++m) {
    std::map<int, long long> by_crossing;
    std::map<int, long long> bare_by_crossing;
    gen_tangled(
        m,
        [&](const TangledDiagram& d) {
          int c = crossing_number(d);
          ++by_crossing[c];
          auto deg = d.degrees();
          if (std::none_of(deg.begin() + 1, deg.end(),
                           [](int x) { return x == 0; })) {
            ++bare_by_crossing[c];
          }
        },
        bound);
    for (int k : {2, 3, 4}) {
      long long brute = 0;
      long long brute_bare = 0;
      for (const auto& [c, count] : by_crossing) {
        if (c < k) brute += count;
      }
      for (const auto& [c, count] : bare_by_crossing) {
        if (c < k) brute_bare += count;
      }
      Count formula = count_all(k, m);
      Count dp = count_by_vt(k, m);
      Json where{{"k", k}, {"n", m}};
      all.check(formula == dp && dp == Count(brute), where);
      bare.check(count_no_isolated(k, m) == count_by_vt(k, m, false) &&
                     count_by_vt(k, m, false) == Count(brute_bare),
                 where);
      if (m == n) {
        summary << (k > 2 ? "; " : "") << "k=" << k << " n=" << m
                << ": formula=" << formula << " vt-dp=" << dp
                << " brute=" << brute;
      }
    }
  }
  auto result = all.finish(scope(n));
  result.detail += " [" + summary.str() + "]";
  return {result, bare.finish(scope(n))};
}

}  // namespace

std::vector<PropertyResult> run_suite(std::string_view suite, int n,
                                      const VerifyLimits& limits) {
  auto within = [&](int bound) {
    if (n < 0 || n > bound) {
      throw std::invalid_argument("suite " + std::string(suite) +
                                  " accepts n in [0, " + std::to_string(bound) +
                                  "], got " + std::to_string(n));
    }
  };
  if (suite == "roundtrip") {
    within(limits.max_roundtrip_n);
    return roundtrip_suite(n, limits.max_roundtrip_n);
  }
  if (suite == "theorem2") {
    within(limits.max_roundtrip_n);
    return theorem2_suite(n, limits.max_roundtrip_n);
  }
  if (suite == "duality") {
    within(limits.max_brute_n);
    return duality_suite(n, limits.max_brute_n);
  }
  if (suite == "corollary") {
    within(limits.max_brute_n);
    return corollary_suite(n, limits.max_brute_n);
  }
  if (suite == "counts") {
    within(limits.max_brute_n);
    return counts_suite(n, limits.max_brute_n);
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace tangle
