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

#ifndef CHANREDUCE_ORACLES_H_
#define CHANREDUCE_ORACLES_H_

#include <span>

#include "chanreduce/binary_view.h"
#include "chanreduce/greedy_merge.h"
#include "chanreduce/joint_distribution.h"

namespace chanreduce {

// h2(a p0 + (1-a) p1) - a h2(p0) - (1-a) h2(p1). Throws kNotSorted unless
// p0 <= p1, kOutOfRange unless a in [0,1].
double concavity_gap(double p0, double p1, double alpha);

// min{p1 - p0, (p1 - p0)^2 / (2 min{p0, 1 - p1})}, the second term infinite
// when min{p0, 1 - p1} == 0.
double lemma_bound(double p0, double p1);

struct GapMax {
  double alpha;
  double value;
};

// Maximizes concavity_gap over alpha. The gap is concave in alpha, so the
// stationary point has a closed form.
GapMax sup_gap(double p0, double p1);

struct Witness {
  int index;     // 1-based i of the pair (p_{i-1}, p_i)
  double value;  // sup_gap over that pair
};

// Adjacent pair of sorted posteriors p_0..p_n with the smallest sup_gap.
// Throws kNotSorted, kOutOfRange for fewer than two points.
Witness sphere_packing_witness(std::span<const double> sorted_posteriors);

// Best interval quantizer with at most L clusters by dynamic programming over
// prefix sums, O(n^2 L). Throws kTooLargeForOracle above kOracleMaxEntries.
inline constexpr int kOracleMaxEntries = 4096;
DegradeOutcome dp_optimal_degrade(const BinaryPosteriorChannel& view, int L);

// |I(before) - I(after)| from H(X) + H(Y) - H(X,Y), a route that shares no
// code with the greedy cost accounting.
double brute_force_delta_I(const JointDistribution& before, const JointDistribution& after);

}  // namespace chanreduce

#endif  // CHANREDUCE_ORACLES_H_
