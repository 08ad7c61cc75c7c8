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

#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>

#include "tangle/bijection.hpp"
#include "tangle/enumerate.hpp"
#include "tangle/json_io.hpp"
#include "tangle/tangle.hpp"
#include "tangle/verify.hpp"

namespace tangle::cli {
namespace {

// Bad input or an out-of-bounds request; maps to kUsageError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CountOptions {
  int k = 0;
  int n = 0;
  bool no_isolated = false;
  std::string method = "formula";
  int max_brute_n = kDefaultDiagramBound;
};

struct TableOptions {
  int k = 0;
  int max_n = 0;
  std::string format = "csv";
};

struct EnumerateOptions {
  int n = 0;
  std::optional<int> k;
  std::string kind = "all";
  std::string format = "json-lines";
  int max_brute_n = kDefaultDiagramBound;
};

struct MapOptions {
  std::string direction;
};

struct VerifyOptions {
  std::string suite;
  int n = 0;
  VerifyLimits limits;
};

void check_dp_bounds(int k, int n) {
  if (k < 2 || k > kMaxCountK) {
    throw UsageError("--k must be in [2, " + std::to_string(kMaxCountK) +
                     "], got " + std::to_string(k));
  }
  if (n < 0 || n > kMaxCountN) {
    throw UsageError("--n must be in [0, " + std::to_string(kMaxCountN) +
                     "], got " + std::to_string(n));
  }
}

Count brute_count(int k, int n, bool no_isolated, int bound) {
  if (n < 0 || n > bound) {
    throw UsageError("brute force is limited to n <= " + std::to_string(bound) +
                     " (--max-brute-n), got " + std::to_string(n));
  }
  long long total = 0;
  gen_tangled(
      n,
      [&](const TangledDiagram& d) {
        if (no_isolated) {
          auto deg = d.degrees();
          for (int v = 1; v <= n; ++v) {
            if (deg[static_cast<std::size_t>(v)] == 0) return;
          }
        }
        if (crossing_number(d) < k) ++total;
      },
      bound);
  return total;
}

int run_count(const CountOptions& o, std::ostream& out) {
  if (o.k < 2) throw UsageError("--k must be at least 2");
  Count result;
  if (o.method == "brute") {
    result = brute_count(o.k, o.n, o.no_isolated, o.max_brute_n);
  } else {
    check_dp_bounds(o.k, o.n);
    if (o.method == "formula") {
      result = o.no_isolated ? count_no_isolated(o.k, o.n) : count_all(o.k, o.n);
    } else {
      result = count_by_vt(o.k, o.n, !o.no_isolated);
    }
  }
  out << result << '\n';
  return kOk;
}

int run_table(const TableOptions& o, std::ostream& out) {
  check_dp_bounds(o.k, o.max_n);
  auto table = tangled_table(o.k, o.max_n);
  out << (o.format == "json" ? table.to_json() : table.to_csv());
  return kOk;
}

int run_enumerate(const EnumerateOptions& o, std::ostream& out) {
  if (o.n < 0 || o.n > o.max_brute_n) {
    throw UsageError("enumerate is limited to n <= " +
                     std::to_string(o.max_brute_n) + " (--max-brute-n), got " +
                     std::to_string(o.n));
  }
  if (o.k && *o.k < 1) throw UsageError("--k must be positive");
  std::optional<DiagramKind> kind;
  if (o.kind != "all") kind = parse_kind(o.kind);
  gen_tangled(
      o.n,
      [&](const TangledDiagram& d) {
        if (kind && !has_kind(classify(d), *kind)) return;
        if (o.k && crossing_number(d) >= *o.k) return;
        out << to_json(d).dump() << '\n';
      },
      o.max_brute_n);
  return kOk;
}

int run_map(const MapOptions& o, std::istream& in, std::ostream& out) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  Json input = Json::parse(text, nullptr, false);
  if (input.is_discarded()) throw UsageError("stdin is not valid JSON");
  try {
    if (o.direction == "to-diagram") {
      out << to_json(beta(tableau_sequence_from_json(input))).dump() << '\n';
    } else {
      out << to_json(beta_inv(diagram_from_json(input))).dump() << '\n';
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int run_verify(const VerifyOptions& o, std::ostream& out) {
  std::vector<PropertyResult> results;
  try {
    results = run_suite(o.suite, o.n, o.limits);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all_passed = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << o.suite << ": " << r.name << " ("
        << r.detail << ")\n";
    if (!r.passed) {
      all_passed = false;
      if (!r.counterexample.empty()) {
        out << "  counterexample: " << r.counterexample << '\n';
      }
    }
  }
  return all_passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangled-diagrams, vacillating tableaux and their enumeration",
               "tangle"};
  app.require_subcommand(1);

  CountOptions count;
  auto* count_cmd =
      app.add_subcommand("count", "Count k-noncrossing tangled-diagrams on [n]");
  count_cmd->add_option("--k", count.k, "Crossing bound k (count cr < k)")
      ->required();
  count_cmd->add_option("--n", count.n, "Number of vertices")->required();
  count_cmd->add_flag("--no-isolated", count.no_isolated,
                      "Only diagrams without isolated vertices");
  count_cmd->add_option("--method", count.method, "formula, vt-dp or brute")
      ->check(CLI::IsMember({"formula", "vt-dp", "brute"}));
  count_cmd->add_option("--max-brute-n", count.max_brute_n,
                        "Largest n accepted by --method brute");

  TableOptions table;
  auto* table_cmd = app.add_subcommand(
      "table", "Counts of k-noncrossing tangled-diagrams for n = 1..max-n");
  table_cmd->add_option("--k", table.k, "Crossing bound k")->required();
  table_cmd->add_option("--max-n", table.max_n, "Last n")->required();
  table_cmd->add_option("--format", table.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  EnumerateOptions enumerate;
  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "Print every tangled-diagram on [n], one JSON per line");
  enumerate_cmd->add_option("--n", enumerate.n, "Number of vertices")
      ->required();
  enumerate_cmd->add_option("--k", enumerate.k,
                            "Keep only diagrams with crossing number < k");
  enumerate_cmd->add_option("--class", enumerate.kind,
                            "all, matching, partition or braid")
      ->check(CLI::IsMember({"all", "matching", "partition", "braid"}));
  enumerate_cmd->add_option("--format", enumerate.format, "json-lines")
      ->check(CLI::IsMember({"json-lines"}));
  enumerate_cmd->add_option("--max-brute-n", enumerate.max_brute_n,
                            "Largest n accepted");

  MapOptions map;
  auto* map_cmd = app.add_subcommand(
      "map", "Apply the bijection to a JSON object read from stdin");
  map_cmd->add_option("--direction", map.direction, "to-tableau or to-diagram")
      ->required()
      ->check(CLI::IsMember({"to-tableau", "to-diagram"}));

  VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify_cmd->add_option("--suite", verify.suite,
                         "roundtrip, theorem2, duality, corollary or counts")
      ->required()
      ->check(CLI::IsMember(
          {"roundtrip", "theorem2", "duality", "corollary", "counts"}));
  verify_cmd->add_option("--n", verify.n, "Check all sizes up to n")
      ->required();
  verify_cmd->add_option("--max-brute-n", verify.limits.max_brute_n,
                         "Largest n for diagram enumeration");
  verify_cmd->add_option("--max-roundtrip-n", verify.limits.max_roundtrip_n,
                         "Largest n for bijection round trips");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (count_cmd->parsed()) return run_count(count, out);
    if (table_cmd->parsed()) return run_table(table, out);
    if (enumerate_cmd->parsed()) return run_enumerate(enumerate, out);
    if (map_cmd->parsed()) return run_map(map, in, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
  } catch (const UsageError& e) {
    err << "tangle: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "tangle: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace tangle::cli
