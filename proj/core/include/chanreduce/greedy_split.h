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

#ifndef CHANREDUCE_GREEDY_SPLIT_H_
#define CHANREDUCE_GREEDY_SPLIT_H_

#include <vector>

#include "chanreduce/binary_view.h"
#include "chanreduce/joint_distribution.h"

namespace chanreduce {

// A source symbol's image under the upgrade kernel: weight alpha on surviving
// symbol left, 1 - alpha on right. Survivors map to themselves (left == right,
// alpha == 1). Indices are positions among the survivors.
struct BetaLink {
  int left;
  int right;
  double alpha;
};

// Calls fn(z, weight) for the one or two targets of a link.
template <typename Fn>
void for_each_target(const BetaLink& link, Fn&& fn) {
  if (link.left == link.right) {
    fn(link.left, 1.0);
  } else {
    fn(link.left, link.alpha);
    fn(link.right, 1.0 - link.alpha);
  }
}

struct SplitStep {
  int size_before;  // alphabet size m before the split
  int removed;      // view entry index
  double cost;      // nats
};

struct UpgradeOutcome {
  std::vector<int> surviving;               // view entry indices, ascending
  std::vector<PosteriorEntry> survivors;    // via the final beta map
  std::vector<PosteriorEntry> sequential;   // via step-by-step redistribution
  std::vector<BetaLink> entry_map;          // per view entry
  std::vector<BetaLink> beta_map;           // per source column
  std::vector<SplitStep> steps;
  double cost_sum = 0.0;                    // running sum of step costs
  JointDistribution pstar_xz;               // rows as in the view, columns = survivors
  double delta_I = 0.0;                     // I(X;Z) - I(X;Y), recomputed from scratch
};

// Throws kNotSorted unless p_left <= p_mid <= p_right.
double split_alpha(double p_left, double p_mid, double p_right);

double split_cost(double mass_mid, double p_left, double p_mid, double p_right);

// Throws kBudgetTooSmall for L < 2.
UpgradeOutcome greedy_split(const BinaryPosteriorChannel& view, int L);

// Per view entry. Throws kExtremeRemoved if the first or last entry is missing
// from surviving, kNotSorted if surviving is not strictly ascending.
std::vector<BetaLink> final_beta_map(const BinaryPosteriorChannel& view,
                                     const std::vector<int>& surviving);

}  // namespace chanreduce

#endif  // CHANREDUCE_GREEDY_SPLIT_H_
