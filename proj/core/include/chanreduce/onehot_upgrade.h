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

#ifndef CHANREDUCE_ONEHOT_UPGRADE_H_
#define CHANREDUCE_ONEHOT_UPGRADE_H_

#include <cstdint>
#include <vector>

#include "chanreduce/greedy_split.h"
#include "chanreduce/joint_distribution.h"
#include "chanreduce/onehot_common.h"

namespace chanreduce {

struct OneHotUpgradeResult {
  int q = 0;
  int64_t L = 0;
  int64_t lambda = 0;
  std::vector<UpgradeOutcome> coordinates;  // one greedy split per chain link
  std::vector<std::vector<int>> z_tuples;   // per pstar column, 0-based components
  JointDistribution pstar_xz;               // rows = input letters of the source
  double delta_I = 0.0;                     // I(X;Z) - I(X;Y), nats
  double bound = 0.0;                       // 128 (q-1) / Lambda^2
  double elapsed_ms = 0.0;
};

struct AssembledJoint {
  std::vector<std::vector<int>> tuples;  // lexicographic
  std::vector<double> mass;              // row-major q x tuples.size()
};

// Throws kBudgetTooSmall when lambda_of(L, q) < 2; propagates kDegenerateTail.
OneHotUpgradeResult upgrade(const JointDistribution& joint, int64_t L);

// Sums P*(x, z) over the outputs y of the chain, with only the non-zero
// products of the sparse upgrade kernels visited. Throws kSupportTooLarge if a
// kernel row has more than two targets.
AssembledJoint assemble_pstar(const AlphaChain& chain,
                              const std::vector<UpgradeOutcome>& outcomes);

struct UpgradeConsistencyReport {
  double sum_residual = 0.0;        // |sum of P*(x,z,y) - 1|
  double marginal_residual = 0.0;   // max |sum_z P*(x,z,y) - P(x,y)|
  double markov_residual = 0.0;     // max |P*(x|z,y) - P*(x|z)|
  double embedding_residual = 0.0;  // max |P*(x_j,z_j,y | X >= j) - sub-problem joint|
  double assembly_residual = 0.0;   // max |sum_y P*(x,z,y) - assembled P*(x,z)|
  double delta_I = 0.0;
  double bound = 0.0;
  int64_t tuples = 0;               // materialized (z, y) pairs

  bool passed(double tol) const;
};

// Materializes P*(x, z, y) literally and checks the structural properties of
// the upgrade. Throws kTooLarge when n * 2^(q-1) exceeds kMaterializeCap.
inline constexpr int64_t kMaterializeCap = 1'000'000;
UpgradeConsistencyReport verify_upgrade_consistency(const OneHotUpgradeResult& result,
                                                    const JointDistribution& source);

}  // namespace chanreduce

#endif  // CHANREDUCE_ONEHOT_UPGRADE_H_
