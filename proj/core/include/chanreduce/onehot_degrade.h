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

#ifndef CHANREDUCE_ONEHOT_DEGRADE_H_
#define CHANREDUCE_ONEHOT_DEGRADE_H_

#include <cstdint>
#include <vector>

#include "chanreduce/greedy_merge.h"
#include "chanreduce/joint_distribution.h"

namespace chanreduce {

struct OneHotDegradeResult {
  int q = 0;
  int64_t L = 0;
  int64_t lambda = 0;
  std::vector<DegradeOutcome> coordinates;  // coordinates[i].quantizer is f_{i+1}
  std::vector<std::vector<int>> z_tuples;   // occupied tuples, lexicographic, 0-based
  std::vector<int> quantizer;               // per output y: index into z_tuples
  JointDistribution pxz;
  double delta_I = 0.0;                     // I(X;Y) - I(X;f(Y)), nats
  double bound = 0.0;                       // 64 (q-1) / Lambda^2
  double elapsed_ms = 0.0;
};

// Throws kBudgetTooSmall for L < 1; propagates kDegenerateTail.
OneHotDegradeResult degrade(const JointDistribution& joint, int64_t L);

// P(X, f(Y)) with f given as 0-based cluster ids per output; labels are the
// 1-based ids. Throws kPartialQuantizer if f misses an output or leaves a
// cluster id in 0..max unused.
JointDistribution apply_quantizer(const JointDistribution& joint, const std::vector<int>& f);

}  // namespace chanreduce

#endif  // CHANREDUCE_ONEHOT_DEGRADE_H_
