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

#include "chanreduce/onehot_upgrade.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>

#include "chanreduce/bounds.h"
#include "chanreduce/error.h"
#include "chanreduce/information.h"

namespace chanreduce {
namespace {

// Packs a tuple of survivor ids into one integer, first coordinate most
// significant, so integer order is lexicographic tuple order.
struct TuplePacker {
  std::vector<uint64_t> radix;

  uint64_t pack(const std::vector<int>& z) const {
    uint64_t key = 0;
    for (size_t i = 0; i < z.size(); ++i) key = key * radix[i] + static_cast<uint64_t>(z[i]);
    return key;
  }
  std::vector<int> unpack(uint64_t key) const {
    std::vector<int> z(radix.size());
    for (size_t i = radix.size(); i-- > 0;) {
      z[i] = static_cast<int>(key % radix[i]);
      key /= radix[i];
    }
    return z;
  }
};

TuplePacker packer_for(const std::vector<UpgradeOutcome>& outcomes) {
  TuplePacker p;
  for (const auto& o : outcomes) p.radix.push_back(o.survivors.size());
  return p;
}

// Visits every tuple z with positive kernel weight for output y, passing the
// product P_Y(y) * prod_i beta_i(z_i | y).
template <typename Fn>
void for_each_tuple(const std::vector<UpgradeOutcome>& outcomes, int y, double py, Fn&& fn) {
  const size_t d = outcomes.size();
  std::vector<int> z(d);
  std::vector<double> prefix(d + 1);
  prefix[0] = py;
  // Odometer over the (at most two) targets of each coordinate.
  std::vector<int> choice(d, 0);
  std::vector<int> width(d);
  for (size_t i = 0; i < d; ++i) {
    const BetaLink& l = outcomes[i].beta_map[y];
    width[i] = l.left == l.right ? 1 : 2;
  }
  size_t from = 0;
  while (true) {
    for (size_t i = from; i < d; ++i) {
      const BetaLink& l = outcomes[i].beta_map[y];
      if (width[i] == 1) {
        z[i] = l.left;
        prefix[i + 1] = prefix[i] * 1.0;
      } else if (choice[i] == 0) {
        z[i] = l.left;
        prefix[i + 1] = prefix[i] * l.alpha;
      } else {
        z[i] = l.right;
        prefix[i + 1] = prefix[i] * (1.0 - l.alpha);
      }
    }
    if (prefix[d] > 0.0) fn(z, prefix[d]);
    size_t i = d;
    while (i > 0 && choice[i - 1] + 1 >= width[i - 1]) {
      choice[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++choice[i - 1];
    from = i - 1;
  }
}

double surviving_posterior(const UpgradeOutcome& o, int z) { return o.survivors[z].posterior; }

}  // namespace

AssembledJoint assemble_pstar(const AlphaChain& chain,
                              const std::vector<UpgradeOutcome>& outcomes) {
  const int q = chain.q();
  const int n = chain.n();
  for (const auto& o : outcomes) {
    if (static_cast<int>(o.beta_map.size()) != n) {
      throw ChannelError(ErrorCode::kSupportTooLarge, "kernel does not cover every output");
    }
    for (const auto& l : o.beta_map) {
      const int k = static_cast<int>(o.survivors.size());
      if (l.left < 0 || l.right < 0 || l.left >= k || l.right >= k) {
        throw ChannelError(ErrorCode::kSupportTooLarge, "kernel target outside survivors");
      }
    }
  }
  const TuplePacker packer = packer_for(outcomes);

  // W(z) = sum_y P_Y(y) prod_i beta_i(z_i | y); the input side of P*(x, z)
  // does not depend on y and is applied afterwards.
  std::unordered_map<uint64_t, double> weight;
  const auto& py = chain.output_mass();
  for (int y = 0; y < n; ++y) {
    if (py[y] == 0.0) continue;
    for_each_tuple(outcomes, y, py[y],
                   [&](const std::vector<int>& z, double w) { weight[packer.pack(z)] += w; });
  }
  std::vector<uint64_t> keys;
  keys.reserve(weight.size());
  for (const auto& [key, w] : weight) {
    if (w > 0.0) keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());

  AssembledJoint out;
  const size_t cols = keys.size();
  out.mass.assign(static_cast<size_t>(q) * cols, 0.0);
  for (size_t c = 0; c < cols; ++c) {
    std::vector<int> z = packer.unpack(keys[c]);
    const double w = weight[keys[c]];
    double prefix = 1.0;  // prod_{i < x} P(X_i = 0 | z_i)
    for (int x = 0; x + 1 < q; ++x) {
      const double p = surviving_posterior(outcomes[x], z[x]);
      out.mass[x * cols + c] = w * prefix * (1.0 - p);
      prefix *= p;
    }
    out.mass[(q - 1) * cols + c] = w * prefix;
    out.tuples.push_back(std::move(z));
  }
  return out;
}

OneHotUpgradeResult upgrade(const JointDistribution& joint, int64_t L) {
  const auto start = std::chrono::steady_clock::now();
  OneHotUpgradeResult r;
  r.q = joint.q();
  r.L = L;
  r.lambda = L >= 1 ? lambda_of(L, r.q) : 0;
  if (r.lambda < 2) {
    throw ChannelError(ErrorCode::kBudgetTooSmall,
                       "one-hot upgrading needs floor(L^(1/(q-1))) >= 2, got L = " +
                           std::to_string(L) + ", q = " + std::to_string(r.q));
  }
  r.bound = bound(BoundKind::kOneHotUp, r.q, L);

  const AlphaChain chain = build_alpha_chain(joint);
  bool changed = false;
  for (int i = 0; i + 1 < r.q; ++i) {
    r.coordinates.push_back(greedy_split(chain.view(i), static_cast<int>(r.lambda)));
    changed = changed || !r.coordinates.back().steps.empty();
  }

  AssembledJoint a = assemble_pstar(chain, r.coordinates);
  const int cols = static_cast<int>(a.tuples.size());
  r.delta_I = changed ? mutual_information(a.mass, r.q, cols) - mutual_information(joint) : 0.0;
  std::vector<std::string> labels;
  labels.reserve(cols);
  for (const auto& z : a.tuples) labels.push_back(tuple_label(z));
  r.z_tuples = std::move(a.tuples);
  r.pstar_xz = JointDistribution::from_mass(r.q, std::move(labels), std::move(a.mass));
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool UpgradeConsistencyReport::passed(double tol) const {
  return sum_residual <= tol && marginal_residual <= tol && markov_residual <= tol &&
         embedding_residual <= tol && assembly_residual <= tol && delta_I >= -tol &&
         delta_I <= bound + tol;
}

UpgradeConsistencyReport verify_upgrade_consistency(const OneHotUpgradeResult& result,
                                                    const JointDistribution& source) {
  const int q = source.q();
  const int n = source.n();
  const int d = q - 1;
  if (static_cast<double>(n) * std::ldexp(1.0, d) > static_cast<double>(kMaterializeCap)) {
    throw ChannelError(ErrorCode::kTooLarge, "too many (z, y) tuples to materialize");
  }
  const AlphaChain chain = build_alpha_chain(source);
  const auto& outs = result.coordinates;
  const std::vector<double> py = source.output_marginal();
  const TuplePacker packer = packer_for(outs);

  // P*(x | z_i, x_1..x_{i-1}) per coordinate, straight from its case split.
  auto gamma = [&](int x, const std::vector<int>& z) {
    const std::vector<int> bits = one_hot(x + 1, q);
    double g = 1.0;
    bool seen_one = false;
    for (int i = 0; i < d; ++i) {
      if (seen_one) {
        g *= bits[i] == 0 ? 1.0 : 0.0;
      } else {
        const double p = outs[i].survivors[z[i]].posterior;
        g *= bits[i] == 1 ? 1.0 - p : p;
      }
      seen_one = seen_one || bits[i] == 1;
    }
    return g;
  };
  auto kernel = [&](int y, const std::vector<int>& z) {
    double b = 1.0;
    for (int i = 0; i < d; ++i) {
      const BetaLink& l = outs[i].beta_map[y];
      double w = 0.0;
      if (l.left == z[i]) w += l.left == l.right ? 1.0 : l.alpha;
      if (l.right == z[i] && l.left != l.right) w += 1.0 - l.alpha;
      b *= w;
    }
    return b;
  };

  struct Cell {
    int y;
    uint64_t key;
    std::vector<int> z;
    std::vector<double> px;  // P*(x, z, y) over x
  };
  std::vector<Cell> cells;
  for (int y = 0; y < n; ++y) {
    // Candidate tuples: every combination of the kernel's targets.
    std::vector<std::vector<int>> cand(1);
    for (int i = 0; i < d; ++i) {
      const BetaLink& l = outs[i].beta_map[y];
      std::vector<std::vector<int>> grown;
      for (const auto& c : cand) {
        grown.push_back(c);
        grown.back().push_back(l.left);
        if (l.right != l.left) {
          grown.push_back(c);
          grown.back().push_back(l.right);
        }
      }
      cand = std::move(grown);
    }
    for (auto& z : cand) {
      Cell cell{y, packer.pack(z), z, std::vector<double>(q)};
      const double pzy = py[y] * kernel(y, z);
      for (int x = 0; x < q; ++x) cell.px[x] = pzy * gamma(x, z);
      cells.push_back(std::move(cell));
    }
  }

  UpgradeConsistencyReport rep;
  rep.tuples = static_cast<int64_t>(cells.size());
  rep.delta_I = result.delta_I;
  rep.bound = result.bound;

  double total = 0.0;
  std::vector<double> marg(static_cast<size_t>(q) * n, 0.0);
  std::unordered_map<uint64_t, std::vector<double>> by_z;
  for (const auto& c : cells) {
    auto& acc = by_z[c.key];
    acc.resize(q, 0.0);
    for (int x = 0; x < q; ++x) {
      total += c.px[x];
      marg[static_cast<size_t>(x) * n + c.y] += c.px[x];
      acc[x] += c.px[x];
    }
  }
  rep.sum_residual = std::fabs(total - 1.0);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < n; ++y) {
      rep.marginal_residual = std::max(
          rep.marginal_residual, std::fabs(marg[static_cast<size_t>(x) * n + y] - source.at(x, y)));
    }
  }

  for (const auto& c : cells) {
    double pzy = 0.0;
    for (double v : c.px) pzy += v;
    if (!(pzy > 0.0)) continue;
    const auto& acc = by_z[c.key];
    double pz = 0.0;
    for (double v : acc) pz += v;
    for (int x = 0; x < q; ++x) {
      rep.markov_residual =
          std::max(rep.markov_residual, std::fabs(c.px[x] / pzy - acc[x] / pz));
    }
  }

  // Compare against the assembled joint, column by column.
  std::unordered_map<uint64_t, int> column;
  for (size_t k = 0; k < result.z_tuples.size(); ++k) {
    column[packer.pack(result.z_tuples[k])] = static_cast<int>(k);
  }
  for (const auto& [key, acc] : by_z) {
    const auto it = column.find(key);
    for (int x = 0; x < q; ++x) {
      const double assembled = it == column.end() ? 0.0 : result.pstar_xz.at(x, it->second);
      rep.assembly_residual = std::max(rep.assembly_residual, std::fabs(acc[x] - assembled));
    }
  }

  // Sub-problem j seen inside P*: condition on X >= j, keep (X_j, Z_j, Y).
  for (int j = 0; j < d; ++j) {
    const UpgradeOutcome& o = outs[j];
    const int k = static_cast<int>(o.survivors.size());
    const double m = chain.link(j).conditioning_mass;
    std::vector<double> lhs(static_cast<size_t>(2) * k * n, 0.0);  // [bit][z][y]
    for (const auto& c : cells) {
      for (int x = j; x < q; ++x) {
        const int bit = x == j ? 1 : 0;
        lhs[(static_cast<size_t>(bit) * k + c.z[j]) * n + c.y] += c.px[x] / m;
      }
    }
    for (int y = 0; y < n; ++y) {
      const double ay = chain.link(j).one[y] + chain.link(j).zero[y];
      for (int z = 0; z < k; ++z) {
        const BetaLink& l = o.beta_map[y];
        double w = 0.0;
        if (l.left == z) w += l.left == l.right ? 1.0 : l.alpha;
        if (l.right == z && l.left != l.right) w += 1.0 - l.alpha;
        const double p = o.survivors[z].posterior;
        for (int bit = 0; bit < 2; ++bit) {
          const double rhs = ay * w * (bit == 1 ? 1.0 - p : p);
          rep.embedding_residual =
              std::max(rep.embedding_residual,
                       std::fabs(lhs[(static_cast<size_t>(bit) * k + z) * n + y] - rhs));
        }
      }
    }
  }
  return rep;
}

}  // namespace chanreduce
