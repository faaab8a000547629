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

#include "chanreduce/onehot_degrade.h"

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>

#include "chanreduce/bounds.h"
#include "chanreduce/error.h"
#include "chanreduce/information.h"
#include "chanreduce/onehot_common.h"

namespace chanreduce {
namespace {

std::vector<double> aggregate(const JointDistribution& joint, const std::vector<int>& f, int k) {
  return aggregate_columns(joint.mass(), joint.q(), joint.n(), f, k);
}

}  // namespace

JointDistribution apply_quantizer(const JointDistribution& joint, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != joint.n()) {
    throw ChannelError(ErrorCode::kPartialQuantizer, "quantizer does not cover every output");
  }
  int k = 0;
  for (int c : f) {
    if (c < 0) throw ChannelError(ErrorCode::kPartialQuantizer, "negative cluster id");
    k = std::max(k, c + 1);
  }
  std::vector<char> used(k, 0);
  for (int c : f) used[c] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw ChannelError(ErrorCode::kPartialQuantizer, "cluster ids are not contiguous");
  }
  std::vector<std::string> labels;
  for (int c = 0; c < k; ++c) labels.push_back(std::to_string(c + 1));
  return JointDistribution::from_mass(joint.q(), std::move(labels), aggregate(joint, f, k));
}

OneHotDegradeResult degrade(const JointDistribution& joint, int64_t L) {
  const auto start = std::chrono::steady_clock::now();
  if (L < 1) {
    throw ChannelError(ErrorCode::kBudgetTooSmall,
                       "degrading needs L >= 1, got " + std::to_string(L));
  }
  OneHotDegradeResult r;
  r.q = joint.q();
  r.L = L;
  r.lambda = lambda_of(L, r.q);
  r.bound = bound(BoundKind::kOneHotDown, r.q, L);

  const AlphaChain chain = build_alpha_chain(joint);
  const int d = r.q - 1;
  const int n = joint.n();
  bool changed = false;
  for (int i = 0; i < d; ++i) {
    r.coordinates.push_back(greedy_merge(chain.view(i), static_cast<int>(r.lambda)));
    changed = changed || !r.coordinates.back().steps.empty();
  }

  // Combined quantizer: pack each output's tuple of cluster ids into one
  // mixed-radix key (lexicographic order preserved), number the distinct keys
  // in ascending order.
  std::vector<uint64_t> key(n, 0);
  for (int i = 0; i < d; ++i) {
    const auto radix = static_cast<uint64_t>(r.coordinates[i].clusters.size());
    const auto& f = r.coordinates[i].quantizer;
    for (int y = 0; y < n; ++y) key[y] = key[y] * radix + static_cast<uint64_t>(f[y]);
  }
  std::vector<uint64_t> distinct(key);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (uint64_t packed : distinct) {
    std::vector<int> t(d);
    for (int i = d - 1; i >= 0; --i) {
      const auto radix = static_cast<uint64_t>(r.coordinates[i].clusters.size());
      t[i] = static_cast<int>(packed % radix);
      packed /= radix;
    }
    r.z_tuples.push_back(std::move(t));
  }
  r.quantizer.resize(n);
  for (int y = 0; y < n; ++y) {
    r.quantizer[y] = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), key[y]) - distinct.begin());
  }

  const int k = static_cast<int>(r.z_tuples.size());
  std::vector<double> table = aggregate(joint, r.quantizer, k);
  r.delta_I = changed ? mutual_information(joint) - mutual_information(table, r.q, k) : 0.0;
  std::vector<std::string> labels;
  labels.reserve(k);
  for (const auto& t : r.z_tuples) labels.push_back(tuple_label(t));
  r.pxz = JointDistribution::from_mass(r.q, std::move(labels), std::move(table));
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace chanreduce
