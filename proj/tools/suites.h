// Copyright 2026 The chanreduce Authors.
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

#ifndef CHANREDUCE_TOOLS_SUITES_H_
#define CHANREDUCE_TOOLS_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace chanreduce::cli {

// Zero means "suite default".
struct SuiteOptions {
  uint64_t seed = 1;
  int instances = 0;
  int max_outputs = 0;
  int q = 0;
  int lambda = 0;
  int64_t points = 0;
};

// One checked property: the worst residual seen must not exceed tolerance.
// Residuals are signed (observed minus allowed) for one-sided checks.
struct InvariantResult {
  std::string name;
  double max_residual = -1e300;
  double tolerance = 0.0;
  int64_t cases = 0;

  bool passed() const { return max_residual <= tolerance; }
};

struct SuiteReport {
  std::string suite;
  std::vector<InvariantResult> invariants;
  std::string offending;  // JSON of the first violating instance, if any

  bool passed() const;
};

// lemma, sphere, claims, bounds, oracle. Throws ChannelError(kParse) for an
// unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);
const std::vector<std::string>& suite_names();

// One line per invariant, then "suite=<name> status=pass|fail".
std::string format_report(const SuiteReport& report);

}  // namespace chanreduce::cli

#endif  // CHANREDUCE_TOOLS_SUITES_H_
