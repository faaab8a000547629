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

#ifndef CHANREDUCE_GREEDY_MERGE_H_
#define CHANREDUCE_GREEDY_MERGE_H_

#include <vector>

#include "chanreduce/binary_view.h"
#include "chanreduce/joint_distribution.h"

namespace chanreduce {

struct MergeStep {
  int size_before;  // number of clusters m before the merge
  int left;         // surviving cluster (view entry index of its first member)
  double cost;      // nats
};

struct DegradeOutcome {
  std::vector<int> cluster_of_entry;     // 0-based, contiguous in posterior order
  std::vector<int> quantizer;            // per source column; zero-mass columns go to 0
  std::vector<PosteriorEntry> clusters;  // mass and mass-weighted posterior
  std::vector<MergeStep> steps;
  double cost_sum = 0.0;
  JointDistribution pxz;                 // rows as in the view, columns = clusters
  double delta_I = 0.0;                  // I(X;Y) - I(X;f(Y))
};

// Throws kZeroMass unless both masses are positive.
double merge_cost(double mass_i, double p_i, double mass_j, double p_j);

// Throws kBudgetTooSmall for L < 1.
DegradeOutcome greedy_merge(const BinaryPosteriorChannel& view, int L);

// Clusters given as a contiguous assignment of view entries; fills everything
// but steps and cost_sum.
DegradeOutcome degrade_outcome_from_clusters(const BinaryPosteriorChannel& view,
                                             std::vector<int> cluster_of_entry);

}  // namespace chanreduce

#endif  // CHANREDUCE_GREEDY_MERGE_H_
