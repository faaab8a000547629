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

#ifndef CHANREDUCE_ONEHOT_COMMON_H_
#define CHANREDUCE_ONEHOT_COMMON_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "chanreduce/binary_view.h"
#include "chanreduce/joint_distribution.h"

namespace chanreduce {

// Bit vector of length q-1 with entry i set iff x == i (1-based x); x == q
// maps to all zeros. Throws kOutOfRange.
std::vector<int> one_hot(int x, int q);

// Largest Lambda with Lambda^(q-1) <= L, in integer arithmetic.
int64_t lambda_of(int64_t L, int q);

// Binary sub-problem i of the one-hot chain: the joint of X_i = 1{X = i} and Y
// conditioned on X_1 = ... = X_{i-1} = 0.
struct AlphaLink {
  std::vector<double> one;   // alpha(1, y) = P(X = i, Y = y) / m_i
  std::vector<double> zero;  // alpha(0, y) = P(X > i, Y = y) / m_i
  double conditioning_mass;  // m_i = P(X >= i)
};

class AlphaChain {
 public:
  AlphaChain(std::vector<AlphaLink> links, std::vector<double> output_mass)
      : links_(std::move(links)), output_mass_(std::move(output_mass)) {}

  int q() const { return static_cast<int>(links_.size()) + 1; }
  int n() const { return static_cast<int>(output_mass_.size()); }
  // 0-based: link(i) is sub-problem i + 1.
  const AlphaLink& link(int i) const { return links_[i]; }
  const std::vector<AlphaLink>& links() const { return links_; }
  // P_Y(y), accumulated along the chain's tail sums.
  const std::vector<double>& output_mass() const { return output_mass_; }

  BinaryPosteriorChannel view(int i, bool coalesce = true) const;

 private:
  std::vector<AlphaLink> links_;
  std::vector<double> output_mass_;
};

// Throws kDegenerateTail if some P(X >= i) vanishes.
AlphaChain build_alpha_chain(const JointDistribution& joint);

}  // namespace chanreduce

#endif  // CHANREDUCE_ONEHOT_COMMON_H_
