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

#include "chanreduce/binary_view.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "chanreduce/error.h"

namespace chanreduce {

BinaryPosteriorChannel BinaryPosteriorChannel::from_table(std::vector<double> bit_one,
                                                          std::vector<double> bit_zero,
                                                          bool coalesce) {
  if (bit_one.size() != bit_zero.size()) {
    throw ChannelError(ErrorCode::kNotBinary, "binary table rows differ in length");
  }
  BinaryPosteriorChannel view;
  view.bit_one_ = std::move(bit_one);
  view.bit_zero_ = std::move(bit_zero);
  const int n = view.source_size();
  view.entry_of_source_.assign(n, -1);

  // (posterior, source index) of every output with positive mass.
  std::vector<std::pair<double, int>> order;
  order.reserve(n);
  for (int y = 0; y < n; ++y) {
    const double m = view.source_mass(y);
    if (m > 0.0) order.emplace_back(view.bit_zero_[y] / m, y);
  }
  std::sort(order.begin(), order.end());

  // Accumulated (mass, bit-zero mass) of the entry under construction.
  double group_mass = 0.0;
  double group_zero = 0.0;
  double group_anchor = 0.0;
  auto flush = [&]() {
    if (group_mass > 0.0) {
      view.entries_.push_back({group_mass, std::min(1.0, group_zero / group_mass)});
    }
    group_mass = group_zero = 0.0;
  };
  for (const auto& [posterior, y] : order) {
    const bool joins =
        coalesce && group_mass > 0.0 && posterior - group_anchor <= kCoalesceTolerance;
    if (!joins) {
      flush();
      group_anchor = posterior;
    }
    if (group_mass == 0.0) {
      group_mass = view.source_mass(y);
      group_zero = view.bit_zero_[y];
    } else {
      group_mass += view.source_mass(y);
      group_zero += view.bit_zero_[y];
    }
    view.entry_of_source_[y] = static_cast<int>(view.entries_.size());
  }
  flush();
  return view;
}

std::vector<double> BinaryPosteriorChannel::source_table() const {
  std::vector<double> table(bit_one_);
  table.insert(table.end(), bit_zero_.begin(), bit_zero_.end());
  return table;
}

JointDistribution BinaryPosteriorChannel::to_joint() const {
  const size_t n = entries_.size();
  std::vector<double> mass(2 * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    mass[k] = entries_[k].mass * (1.0 - entries_[k].posterior);
    mass[n + k] = entries_[k].mass * entries_[k].posterior;
    labels.push_back(std::to_string(k + 1));
  }
  return JointDistribution::from_mass(2, std::move(labels), std::move(mass));
}

BinaryPosteriorChannel to_binary_view(const JointDistribution& joint, bool coalesce) {
  if (joint.q() != 2) {
    throw ChannelError(ErrorCode::kNotBinary,
                       "binary view needs q = 2, got q = " + std::to_string(joint.q()));
  }
  const auto one = joint.row(0);
  const auto zero = joint.row(1);
  return BinaryPosteriorChannel::from_table(std::vector<double>(one.begin(), one.end()),
                                            std::vector<double>(zero.begin(), zero.end()),
                                            coalesce);
}

}  // namespace chanreduce
