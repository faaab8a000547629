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

#ifndef CHANREDUCE_JOINT_DISTRIBUTION_H_
#define CHANREDUCE_JOINT_DISTRIBUTION_H_

#include <span>
#include <string>
#include <vector>

namespace chanreduce {

// Which symbols were dropped because their marginal probability was zero.
struct PruneReport {
  std::vector<int> pruned_inputs;          // 0-based rows of the raw table
  std::vector<std::string> pruned_labels;  // output labels of dropped columns

  bool empty() const { return pruned_inputs.empty() && pruned_labels.empty(); }
};

// A finite joint distribution P_{X,Y} over q input letters and n output
// symbols, stored row-major (row = input letter). Immutable once built.
//
// Construction validates the table (entries >= 0, total within 1e-9 of one),
// rescales it to unit mass, and prunes zero-probability rows and columns so
// that every remaining marginal is strictly positive.
class JointDistribution {
 public:
  static constexpr double kSumTolerance = 1e-9;
  // Totals this close to 1 are not renormalized.
  static constexpr double kKeepTolerance = 1e-14;

  // Empty placeholder with q() == 0.
  JointDistribution() = default;

  // Throws ChannelError: kNegativeEntry, kNonStochastic, kDegenerateInput
  // (fewer than two input letters or no output symbol survive pruning).
  static JointDistribution from_mass(int q, std::vector<std::string> labels,
                                     std::vector<double> mass);

  int q() const { return q_; }
  int n() const { return static_cast<int>(labels_.size()); }

  double at(int x, int y) const { return mass_[static_cast<size_t>(x) * n() + y]; }
  std::span<const double> mass() const { return mass_; }
  std::span<const double> row(int x) const {
    return std::span<const double>(mass_).subspan(static_cast<size_t>(x) * n(), n());
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const PruneReport& pruned() const { return pruned_; }
  // Original (pre-pruning) row index of each remaining input letter.
  const std::vector<int>& kept_inputs() const { return kept_inputs_; }

  std::vector<double> input_marginal() const;
  std::vector<double> output_marginal() const;

 private:
  int q_ = 0;
  std::vector<std::string> labels_;
  std::vector<double> mass_;
  std::vector<int> kept_inputs_;
  PruneReport pruned_;
};

// Builds P_X(x) W(y|x). `channel` holds q rows of length n, each a
// conditional distribution. Output labels default to "1".."n".
JointDistribution make_joint(std::span<const double> input_dist,
                             const std::vector<std::vector<double>>& channel,
                             std::vector<std::string> labels = {});

// Label for a composite output symbol, e.g. {0, 4} -> "1-5" (1-based).
// Sums the columns of a row-major q x n table into k buckets; column y goes to
// bucket[y] (0-based). Columns are visited in ascending order.
std::vector<double> aggregate_columns(std::span<const double> mass, int q, int n,
                                      std::span<const int> bucket, int k);

// "z1-z2-..." with 1-based components.
std::string tuple_label(std::span<const int> tuple);

}  // namespace chanreduce

#endif  // CHANREDUCE_JOINT_DISTRIBUTION_H_
