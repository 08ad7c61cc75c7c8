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

// Exhaustive property checks behind `tangle verify`.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tangle {

struct PropertyResult {
  std::string name;
  bool passed = true;
  // Free-form summary, e.g. how many objects were checked.
  std::string detail;
  // Canonical JSON of the first failing input, empty on success.
  std::string counterexample;
};

struct VerifyLimits {
  int max_brute_n = 6;
  int max_roundtrip_n = 5;
};

inline constexpr std::string_view kSuites[] = {"roundtrip", "theorem2",
                                               "duality", "corollary",
                                               "counts"};

// Runs every property of `suite` for all sizes 0..n. Throws
// std::invalid_argument for an unknown suite or an n beyond the suite's bound.
std::vector<PropertyResult> run_suite(std::string_view suite, int n,
                                      const VerifyLimits& limits = {});

}  // namespace tangle
