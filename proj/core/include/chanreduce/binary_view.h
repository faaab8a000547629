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

#ifndef CHANREDUCE_BINARY_VIEW_H_
#define CHANREDUCE_BINARY_VIEW_H_

#include <vector>

#include "chanreduce/joint_distribution.h"

namespace chanreduce {

struct PosteriorEntry {
  double mass;       // P_Y(y)
  double posterior;  // P(X = 0 | Y = y)
};

// Binary-input channel seen through its output posteriors.
//
// The source is a 2 x n table whose first row is input bit 1 and second row
// input bit 0; for a two-letter JointDistribution that is rows (x=1, x=2), the
// same orientation as the one-hot bit X_1 = 1{X = 1}. Entries are sorted by
// ascending posterior, ties by source column. With coalescing on, columns whose
// posteriors agree within kCoalesceTolerance share one entry; this costs no
// mutual information. Zero-mass source columns have no entry.
class BinaryPosteriorChannel {
 public:
  static constexpr double kCoalesceTolerance = 1e-14;

  static BinaryPosteriorChannel from_table(std::vector<double> bit_one,
                                           std::vector<double> bit_zero,
                                           bool coalesce = true);

  const std::vector<PosteriorEntry>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

  int source_size() const { return static_cast<int>(bit_one_.size()); }
  // Entry index of each source column, or -1 for zero-mass columns.
  const std::vector<int>& entry_of_source() const { return entry_of_source_; }
  const std::vector<double>& bit_one() const { return bit_one_; }
  const std::vector<double>& bit_zero() const { return bit_zero_; }
  // bit_one + bit_zero per source column.
  double source_mass(int y) const { return bit_one_[y] + bit_zero_[y]; }

  // Row-major 2 x n copy of the source table.
  std::vector<double> source_table() const;

  // The channel with one output per entry.
  JointDistribution to_joint() const;

 private:
  std::vector<PosteriorEntry> entries_;
  std::vector<int> entry_of_source_;
  std::vector<double> bit_one_;
  std::vector<double> bit_zero_;
};

// Throws kNotBinary unless joint.q() == 2.
BinaryPosteriorChannel to_binary_view(const JointDistribution& joint, bool coalesce = true);

}  // namespace chanreduce

#endif  // CHANREDUCE_BINARY_VIEW_H_
