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

#include "chanreduce/greedy_split.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

#include "chanreduce/error.h"
#include "chanreduce/information.h"

namespace chanreduce {
namespace {

void check_sorted(double a, double b, double c) {
  if (!(a <= b && b <= c)) {
    throw ChannelError(ErrorCode::kNotSorted, "posteriors are not in ascending order");
  }
}

// Total-mass form of the split cost. The concavity gap of h2 at the split
// point equals the weighted KL divergences to it, which stay non-negative in
// floating point.
double split_cost_unchecked(double mass, double pl, double pm, double pr, double alpha) {
  return mixing_gap(mass * alpha, pl, mass * (1.0 - alpha), pr, pm);
}

double alpha_unchecked(double pl, double pm, double pr) {
  if (pr == pl) return 1.0;
  return std::clamp((pr - pm) / (pr - pl), 0.0, 1.0);
}

std::vector<double> pstar_table(const BinaryPosteriorChannel& view, const UpgradeOutcome& out) {
  const int k = static_cast<int>(out.survivors.size());
  std::vector<double> weight(k, 0.0);
  for (int y = 0; y < view.source_size(); ++y) {
    const double m = view.source_mass(y);
    if (m == 0.0) continue;
    for_each_target(out.beta_map[y], [&](int z, double w) { weight[z] += m * w; });
  }
  std::vector<double> table(2 * static_cast<size_t>(k));
  for (int z = 0; z < k; ++z) {
    const double p = view.entries()[out.surviving[z]].posterior;
    table[z] = weight[z] * (1.0 - p);
    table[k + z] = weight[z] * p;
  }
  return table;
}

}  // namespace

double split_alpha(double p_left, double p_mid, double p_right) {
  check_sorted(p_left, p_mid, p_right);
  return alpha_unchecked(p_left, p_mid, p_right);
}

double split_cost(double mass_mid, double p_left, double p_mid, double p_right) {
  const double alpha = split_alpha(p_left, p_mid, p_right);
  return split_cost_unchecked(mass_mid, p_left, p_mid, p_right, alpha);
}

std::vector<BetaLink> final_beta_map(const BinaryPosteriorChannel& view,
                                     const std::vector<int>& surviving) {
  const int n = view.size();
  if (surviving.empty() || surviving.front() != 0 || surviving.back() != n - 1) {
    throw ChannelError(ErrorCode::kExtremeRemoved,
                       "extreme posteriors must survive an upgrade");
  }
  const auto& e = view.entries();
  std::vector<BetaLink> map(n);
  int z = 0;
  for (int k = 0; k < n; ++k) {
    if (surviving[z] == k) {
      map[k] = {z, z, 1.0};
      if (k < n - 1) {
        ++z;
        if (surviving[z] <= k) {
          throw ChannelError(ErrorCode::kNotSorted, "surviving set is not ascending");
        }
      }
      continue;
    }
    const double pl = e[surviving[z - 1]].posterior;
    const double pr = e[surviving[z]].posterior;
    map[k] = {z - 1, z, split_alpha(pl, e[k].posterior, pr)};
  }
  return map;
}

UpgradeOutcome greedy_split(const BinaryPosteriorChannel& view, int L) {
  if (L < 2) {
    throw ChannelError(ErrorCode::kBudgetTooSmall,
                       "upgrading needs L >= 2, got " + std::to_string(L));
  }
  const auto& e = view.entries();
  const int n = view.size();
  UpgradeOutcome out;
  std::vector<double> mass(n);
  for (int k = 0; k < n; ++k) mass[k] = e[k].mass;

  if (n > L) {
    std::vector<int> prev(n), next(n), version(n, 0);
    for (int k = 0; k < n; ++k) {
      prev[k] = k - 1;
      next[k] = k + 1 < n ? k + 1 : -1;
    }
    using Key = std::tuple<double, int, int>;  // cost, entry, version
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    auto push = [&](int k) {
      if (prev[k] < 0 || next[k] < 0) return;
      const double pl = e[prev[k]].posterior;
      const double pr = e[next[k]].posterior;
      const double alpha = alpha_unchecked(pl, e[k].posterior, pr);
      heap.emplace(split_cost_unchecked(mass[k], pl, e[k].posterior, pr, alpha), k,
                   version[k]);
    };
    for (int k = 1; k + 1 < n; ++k) push(k);

    int alive = n;
    while (alive > L) {
      const auto [cost, k, ver] = heap.top();
      heap.pop();
      if (ver != version[k]) continue;
      const int l = prev[k];
      const int r = next[k];
      const double alpha = alpha_unchecked(e[l].posterior, e[k].posterior, e[r].posterior);
      mass[l] += alpha * mass[k];
      mass[r] += (1.0 - alpha) * mass[k];
      out.steps.push_back({alive, k, cost});
      out.cost_sum += cost;
      next[l] = r;
      prev[r] = l;
      ++version[k];  // never pushed again
      ++version[l];
      ++version[r];
      --alive;
      push(l);
      push(r);
    }
    for (int k = 0; k >= 0; k = next[k]) out.surviving.push_back(k);
  } else {
    out.surviving.resize(n);
    for (int k = 0; k < n; ++k) out.surviving[k] = k;
  }

  for (int k : out.surviving) out.sequential.push_back({mass[k], e[k].posterior});

  out.entry_map = final_beta_map(view, out.surviving);
  const int kept = static_cast<int>(out.surviving.size());
  std::vector<double> kept_mass(kept, 0.0);
  for (int k = 0; k < n; ++k) {
    for_each_target(out.entry_map[k], [&](int z, double w) { kept_mass[z] += e[k].mass * w; });
  }
  for (int z = 0; z < kept; ++z) {
    out.survivors.push_back({kept_mass[z], e[out.surviving[z]].posterior});
  }

  out.beta_map.resize(view.source_size());
  for (int y = 0; y < view.source_size(); ++y) {
    const int k = view.entry_of_source()[y];
    out.beta_map[y] = k >= 0 ? out.entry_map[k] : BetaLink{0, 0, 1.0};
  }

  std::vector<double> table = pstar_table(view, out);
  std::vector<std::string> labels;
  for (int z = 0; z < kept; ++z) labels.push_back(std::to_string(z + 1));
  const std::vector<double> source = view.source_table();
  out.delta_I = out.steps.empty()
                    ? 0.0
                    : mutual_information(table, 2, kept) -
                          mutual_information(source, 2, view.source_size());
  out.pstar_xz = JointDistribution::from_mass(2, std::move(labels), std::move(table));
  return out;
}

}  // namespace chanreduce
