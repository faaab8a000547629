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

#ifndef CHANREDUCE_TOOLS_SWEEP_H_
#define CHANREDUCE_TOOLS_SWEEP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chanreduce/joint_distribution.h"

namespace chanreduce::cli {

enum class Mode { kUpgrade, kDegrade };

struct SweepRecord {
  int64_t L_design = 0;
  int64_t L_actual = 0;
  std::optional<double> delta_I;  // empty when the run failed; nats
  std::optional<double> bound;    // nats
  Mode mode = Mode::kUpgrade;
  int q = 0;
  double elapsed_ms = 0.0;
  std::string error;
};

const char* mode_name(Mode m);

// Runs one reduction per L (concurrently up to jobs); the result is ordered by
// L_design whatever the schedule.
std::vector<SweepRecord> run_sweep(const JointDistribution& joint, Mode mode,
                                   std::vector<int64_t> L_list, int jobs);

// Header "L_design,L_actual,delta_I,bound,mode,q,elapsed_ms". Information
// columns are scaled to bits when bits is set; elapsed_ms is left empty when
// timing is off.
std::string sweep_csv(const std::vector<SweepRecord>& rows, bool bits, bool timing);

// Least-squares slope of log delta_I against log L_actual over the rows with
// positive delta_I; empty with fewer than two distinct points.
std::optional<double> loglog_slope(const std::vector<SweepRecord>& rows);

}  // namespace chanreduce::cli

#endif  // CHANREDUCE_TOOLS_SWEEP_H_
