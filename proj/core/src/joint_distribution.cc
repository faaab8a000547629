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

#include "chanreduce/joint_distribution.h"

#include <cmath>
#include <numeric>
#include <utility>

#include "chanreduce/error.h"

namespace chanreduce {

JointDistribution JointDistribution::from_mass(int q, std::vector<std::string> labels,
                                               std::vector<double> mass) {
  if (q < 1 || labels.empty()) {
    throw ChannelError(ErrorCode::kDegenerateInput, "empty joint distribution");
  }
  const size_t n = labels.size();
  if (mass.size() != static_cast<size_t>(q) * n) {
    throw ChannelError(ErrorCode::kNonStochastic, "mass table has wrong shape");
  }
  double total = 0.0;
  for (double v : mass) {
    if (std::isnan(v)) throw ChannelError(ErrorCode::kNonStochastic, "NaN entry");
    if (v < 0.0) throw ChannelError(ErrorCode::kNegativeEntry, "negative probability");
    total += v;
  }
  if (!(std::fabs(total - 1.0) <= kSumTolerance)) {
    throw ChannelError(ErrorCode::kNonStochastic,
                       "total mass " + std::to_string(total) + " is not 1");
  }

  std::vector<double> row_sum(q, 0.0), col_sum(n, 0.0);
  for (int x = 0; x < q; ++x) {
    for (size_t y = 0; y < n; ++y) {
      row_sum[x] += mass[x * n + y];
      col_sum[y] += mass[x * n + y];
    }
  }

  JointDistribution j;
  std::vector<size_t> kept_cols;
  for (size_t y = 0; y < n; ++y) {
    if (col_sum[y] > 0.0) {
      kept_cols.push_back(y);
    } else {
      j.pruned_.pruned_labels.push_back(labels[y]);
    }
  }
  for (int x = 0; x < q; ++x) {
    if (row_sum[x] > 0.0) {
      j.kept_inputs_.push_back(x);
    } else {
      j.pruned_.pruned_inputs.push_back(x);
    }
  }
  if (j.kept_inputs_.size() < 2) {
    throw ChannelError(ErrorCode::kDegenerateInput,
                       "fewer than two input letters have positive probability");
  }

  j.q_ = static_cast<int>(j.kept_inputs_.size());
  j.labels_.reserve(kept_cols.size());
  for (size_t y : kept_cols) j.labels_.push_back(std::move(labels[y]));
  // Tables already normalized to rounding are kept bit-for-bit, so that
  // re-validating a derived joint does not perturb it.
  if (j.pruned_.empty() && std::fabs(total - 1.0) <= kKeepTolerance) {
    j.mass_ = std::move(mass);
    return j;
  }
  j.mass_.reserve(j.kept_inputs_.size() * kept_cols.size());
  for (int x : j.kept_inputs_) {
    for (size_t y : kept_cols) j.mass_.push_back(mass[x * n + y] / total);
  }
  return j;
}

std::vector<double> JointDistribution::input_marginal() const {
  std::vector<double> px(q_, 0.0);
  const int cols = n();
  for (int x = 0; x < q_; ++x) {
    for (int y = 0; y < cols; ++y) px[x] += at(x, y);
  }
  return px;
}

std::vector<double> JointDistribution::output_marginal() const {
  const int cols = n();
  std::vector<double> py(cols, 0.0);
  for (int x = 0; x < q_; ++x) {
    for (int y = 0; y < cols; ++y) py[y] += at(x, y);
  }
  return py;
}

JointDistribution make_joint(std::span<const double> input_dist,
                             const std::vector<std::vector<double>>& channel,
                             std::vector<std::string> labels) {
  const size_t q = input_dist.size();
  if (q == 0 || channel.size() != q || channel[0].empty()) {
    throw ChannelError(ErrorCode::kNonStochastic, "channel shape does not match input");
  }
  const size_t n = channel[0].size();
  auto check_vector = [](std::span<const double> v, const char* what) {
    double s = 0.0;
    for (double p : v) {
      if (std::isnan(p)) throw ChannelError(ErrorCode::kNonStochastic, what);
      if (p < 0.0) throw ChannelError(ErrorCode::kNegativeEntry, what);
      s += p;
    }
    if (!(std::fabs(s - 1.0) <= JointDistribution::kSumTolerance)) {
      throw ChannelError(ErrorCode::kNonStochastic, std::string(what) + " does not sum to 1");
    }
  };
  check_vector(input_dist, "input distribution");
  for (const auto& r : channel) {
    if (r.size() != n) throw ChannelError(ErrorCode::kNonStochastic, "ragged channel matrix");
    check_vector(r, "channel row");
  }
  if (labels.empty()) {
    for (size_t y = 0; y < n; ++y) labels.push_back(std::to_string(y + 1));
  } else if (labels.size() != n) {
    throw ChannelError(ErrorCode::kNonStochastic, "label count does not match outputs");
  }
  std::vector<double> mass(q * n);
  for (size_t x = 0; x < q; ++x) {
    for (size_t y = 0; y < n; ++y) mass[x * n + y] = input_dist[x] * channel[x][y];
  }
  return JointDistribution::from_mass(static_cast<int>(q), std::move(labels), std::move(mass));
}

std::vector<double> aggregate_columns(std::span<const double> mass, int q, int n,
                                      std::span<const int> bucket, int k) {
  std::vector<double> out(static_cast<size_t>(q) * k, 0.0);
  for (int x = 0; x < q; ++x) {
    const double* src = mass.data() + static_cast<size_t>(x) * n;
    double* dst = out.data() + static_cast<size_t>(x) * k;
    for (int y = 0; y < n; ++y) dst[bucket[y]] += src[y];
  }
  return out;
}

std::string tuple_label(std::span<const int> tuple) {
  std::string out;
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(tuple[i] + 1);
  }
  return out;
}

}  // namespace chanreduce
