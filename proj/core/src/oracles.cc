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

#include "chanreduce/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "chanreduce/error.h"
#include "chanreduce/information.h"

namespace chanreduce {
namespace {

void check_pair(double p0, double p1) {
  if (!(p0 >= 0.0 && p1 <= 1.0)) {
    throw ChannelError(ErrorCode::kOutOfRange, "posterior outside [0,1]");
  }
  if (!(p0 <= p1)) throw ChannelError(ErrorCode::kNotSorted, "need p0 <= p1");
}

double gap_unchecked(double p0, double p1, double alpha) {
  const double mid = alpha * p0 + (1.0 - alpha) * p1;
  return mixing_gap(alpha, p0, 1.0 - alpha, p1, std::clamp(mid, p0, p1));
}

double plain_entropy_sum(std::span<const double> v) {
  double h = 0.0;
  for (double p : v) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double info_by_entropies(const JointDistribution& j) {
  std::vector<double> px(j.q(), 0.0), py(j.n(), 0.0);
  for (int x = 0; x < j.q(); ++x) {
    for (int y = 0; y < j.n(); ++y) {
      px[x] += j.at(x, y);
      py[y] += j.at(x, y);
    }
  }
  return plain_entropy_sum(px) + plain_entropy_sum(py) - plain_entropy_sum(j.mass());
}

}  // namespace

double concavity_gap(double p0, double p1, double alpha) {
  check_pair(p0, p1);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ChannelError(ErrorCode::kOutOfRange, "alpha outside [0,1]");
  }
  return gap_unchecked(p0, p1, alpha);
}

double lemma_bound(double p0, double p1) {
  check_pair(p0, p1);
  const double d = p1 - p0;
  const double edge = std::min(p0, 1.0 - p1);
  if (edge == 0.0) return d;
  return std::min(d, d * d / (2.0 * edge));
}

GapMax sup_gap(double p0, double p1) {
  check_pair(p0, p1);
  if (p0 == p1) return {0.5, 0.0};
  // Stationary point: h2'(c) = ln((1-c)/c) equals the chord slope.
  const double slope = (binary_entropy(p1) - binary_entropy(p0)) / (p1 - p0);
  const double c = 1.0 / (1.0 + std::exp(slope));
  const double alpha = std::clamp((p1 - c) / (p1 - p0), 0.0, 1.0);
  return {alpha, gap_unchecked(p0, p1, alpha)};
}

Witness sphere_packing_witness(std::span<const double> p) {
  if (p.size() < 2) {
    throw ChannelError(ErrorCode::kOutOfRange, "need at least two posteriors");
  }
  Witness best{0, std::numeric_limits<double>::infinity()};
  for (size_t i = 1; i < p.size(); ++i) {
    const double v = sup_gap(p[i - 1], p[i]).value;
    if (v < best.value) best = {static_cast<int>(i), v};
  }
  return best;
}

DegradeOutcome dp_optimal_degrade(const BinaryPosteriorChannel& view, int L) {
  const int n = view.size();
  if (n > kOracleMaxEntries) {
    throw ChannelError(ErrorCode::kTooLargeForOracle,
                       "oracle limited to " + std::to_string(kOracleMaxEntries) + " entries");
  }
  if (L < 1) throw ChannelError(ErrorCode::kBudgetTooSmall, "L must be >= 1");
  const int k_max = std::min(L, n);
  std::vector<int> cluster(n);
  if (k_max == n) {
    for (int i = 0; i < n; ++i) cluster[i] = i;
    return degrade_outcome_from_clusters(view, std::move(cluster));
  }

  // Maximizing I(X; f(Y)) over interval partitions is minimizing
  // sum_c S_c h2(P_c / S_c), the conditional entropy H(X | f(Y)).
  std::vector<double> s(n + 1, 0.0), sp(n + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    s[i + 1] = s[i] + view.entries()[i].mass;
    sp[i + 1] = sp[i] + view.entries()[i].mass * view.entries()[i].posterior;
  }
  auto cost = [&](int a, int b) {  // entries a..b-1
    const double m = s[b] - s[a];
    if (!(m > 0.0)) return 0.0;
    const double p = std::clamp((sp[b] - sp[a]) / m, 0.0, 1.0);
    return m * binary_entropy(p);
  };
  const double inf = std::numeric_limits<double>::infinity();
  // best[k][i]: first i entries in exactly k clusters.
  std::vector<std::vector<double>> best(k_max + 1, std::vector<double>(n + 1, inf));
  std::vector<std::vector<int>> cut(k_max + 1, std::vector<int>(n + 1, -1));
  best[0][0] = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    for (int i = k; i <= n - (k_max - k); ++i) {
      for (int j = k - 1; j < i; ++j) {
        if (best[k - 1][j] == inf) continue;
        const double v = best[k - 1][j] + cost(j, i);
        if (v < best[k][i]) {
          best[k][i] = v;
          cut[k][i] = j;
        }
      }
    }
  }
  for (int i = n, k = k_max; k > 0; --k) {
    const int j = cut[k][i];
    for (int t = j; t < i; ++t) cluster[t] = k - 1;
    i = j;
  }
  return degrade_outcome_from_clusters(view, std::move(cluster));
}

double brute_force_delta_I(const JointDistribution& before, const JointDistribution& after) {
  return std::fabs(info_by_entropies(before) - info_by_entropies(after));
}

}  // namespace chanreduce
