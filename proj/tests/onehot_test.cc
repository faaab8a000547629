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

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "chanreduce/binary_view.h"
#include "chanreduce/bounds.h"
#include "chanreduce/channel_gen.h"
#include "chanreduce/error.h"
#include "chanreduce/greedy_merge.h"
#include "chanreduce/greedy_split.h"
#include "chanreduce/information.h"
#include "chanreduce/onehot_common.h"
#include "chanreduce/onehot_degrade.h"
#include "chanreduce/onehot_upgrade.h"
#include "test_util.h"

namespace chanreduce {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const ChannelError& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(OneHot, Examples) {
  EXPECT_EQ(one_hot(1, 3), (std::vector<int>{1, 0}));
  EXPECT_EQ(one_hot(3, 3), (std::vector<int>{0, 0}));
  EXPECT_EQ(one_hot(2, 4), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(code_of([] { one_hot(0, 3); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { one_hot(4, 3); }), ErrorCode::kOutOfRange);
}

TEST(LambdaOf, Examples) {
  EXPECT_EQ(lambda_of(10, 3), 3);
  EXPECT_EQ(lambda_of(7, 2), 7);
  EXPECT_EQ(lambda_of(8, 4), 2);
  EXPECT_EQ(lambda_of(1, 5), 1);
}

TEST(LambdaOf, PerfectPowersAndNeighbors) {
  for (int q = 2; q <= 7; ++q) {
    for (int64_t b = 1; b <= 60; ++b) {
      int64_t p = 1;
      for (int i = 0; i < q - 1; ++i) p *= b;
      if (p > (int64_t{1} << 50)) break;
      EXPECT_EQ(lambda_of(p, q), b);
      EXPECT_EQ(lambda_of(p + 1, q), q == 2 ? b + 1 : b);
      if (p > 1) EXPECT_EQ(lambda_of(p - 1, q), b - 1);
    }
  }
  EXPECT_EQ(lambda_of(INT64_MAX, 2), INT64_MAX);
  EXPECT_EQ(lambda_of(INT64_MAX, 3), 3037000499);
}

TEST(AlphaChain, HandExample) {
  const auto j = testing::from_table({{0.3, 0.1}, {0.1, 0.2}, {0.1, 0.2}});
  const auto chain = build_alpha_chain(j);
  ASSERT_EQ(chain.q(), 3);
  const auto& a1 = chain.link(0);
  EXPECT_EQ(a1.conditioning_mass, 1.0);
  EXPECT_NEAR(a1.one[0], 0.3, 1e-15);
  EXPECT_NEAR(a1.one[1], 0.1, 1e-15);
  EXPECT_NEAR(a1.zero[0], 0.2, 1e-15);
  EXPECT_NEAR(a1.zero[1], 0.4, 1e-15);
  const auto& a2 = chain.link(1);
  EXPECT_NEAR(a2.conditioning_mass, 0.6, 1e-15);
  EXPECT_NEAR(a2.one[0], 1.0 / 6, 1e-15);
  EXPECT_NEAR(a2.one[1], 1.0 / 3, 1e-15);
  EXPECT_NEAR(a2.zero[0], 1.0 / 6, 1e-15);
  EXPECT_NEAR(a2.zero[1], 1.0 / 3, 1e-15);
}

TEST(AlphaChain, BinaryIsTheJointItself) {
  const auto j = random_channel(2, 17, 3);
  const auto chain = build_alpha_chain(j);
  ASSERT_EQ(chain.q(), 2);
  for (int y = 0; y < j.n(); ++y) {
    EXPECT_EQ(chain.link(0).one[y], j.at(0, y));
    EXPECT_EQ(chain.link(0).zero[y], j.at(1, y));
  }
}

TEST(AlphaChain, ChainRule) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const int q = 2 + static_cast<int>(seed % 5);
    const auto j = random_channel(q, 5 + static_cast<int>(seed * 3 % 40), seed);
    const auto chain = build_alpha_chain(j);
    double sum = 0.0;
    double m_next = 1.0;
    for (int i = 0; i < q - 1; ++i) {
      const auto& l = chain.link(i);
      EXPECT_NEAR(l.conditioning_mass, m_next, 1e-15);
      double s = 0.0, zero = 0.0;
      for (int y = 0; y < j.n(); ++y) {
        s += l.one[y] + l.zero[y];
        zero += l.zero[y];
      }
      EXPECT_NEAR(s, 1.0, 1e-12);
      m_next = l.conditioning_mass * zero;
      std::vector<double> mass(l.one);
      mass.insert(mass.end(), l.zero.begin(), l.zero.end());
      sum += l.conditioning_mass * mutual_information(mass, 2, j.n());
    }
    EXPECT_NEAR(sum, mutual_information(j), 1e-10);
  }
}

// P*(x, z) by explicit summation over every (x, z, y), z ranging over the
// full product of survivor sets.
std::map<std::vector<int>, std::vector<double>> brute_force_pstar(
    const JointDistribution& j, const std::vector<UpgradeOutcome>& outs) {
  const int q = j.q(), d = q - 1;
  std::map<std::vector<int>, std::vector<double>> acc;
  std::vector<int> z(d, 0);
  while (true) {
    std::vector<double> col(q, 0.0);
    for (int y = 0; y < j.n(); ++y) {
      double py = 0.0;
      for (int x = 0; x < q; ++x) py += j.at(x, y);
      double beta = 1.0;
      for (int i = 0; i < d; ++i) {
        const BetaLink& l = outs[i].beta_map[y];
        double w = 0.0;
        if (l.left == l.right) {
          w = l.left == z[i] ? 1.0 : 0.0;
        } else {
          if (l.left == z[i]) w += l.alpha;
          if (l.right == z[i]) w += 1.0 - l.alpha;
        }
        beta *= w;
      }
      for (int x = 1; x <= q; ++x) {
        double g = 1.0;
        for (int i = 1; i <= d; ++i) {
          const double p = outs[i - 1].survivors[z[i - 1]].posterior;
          if (i < x) g *= p;             // x_i = 0, no earlier one
          else if (i == x) g *= 1 - p;   // x_i = 1
        }
        col[x - 1] += py * beta * g;
      }
    }
    acc[z] = col;
    int i = d - 1;
    while (i >= 0 && ++z[i] == static_cast<int>(outs[i].survivors.size())) z[i--] = 0;
    if (i < 0) break;
  }
  return acc;
}

class UpgradeToy : public ::testing::TestWithParam<int> {};

TEST_P(UpgradeToy, AssemblyMatchesBruteForce) {
  const uint64_t seed = GetParam();
  const int q = 3 + static_cast<int>(seed % 2);
  const int n = 3 + static_cast<int>(seed % 4);
  const auto j = random_channel(q, n, seed);
  const int64_t L = q == 3 ? 4 : 8;  // Lambda = 2
  const auto r = upgrade(j, L);
  EXPECT_EQ(r.lambda, 2);
  const auto ref = brute_force_pstar(j, r.coordinates);
  std::map<std::vector<int>, int> col;
  for (size_t c = 0; c < r.z_tuples.size(); ++c) col[r.z_tuples[c]] = static_cast<int>(c);
  for (const auto& [z, v] : ref) {
    const auto it = col.find(z);
    for (int x = 0; x < q; ++x) {
      const double got = it == col.end() ? 0.0 : r.pstar_xz.at(x, it->second);
      EXPECT_NEAR(got, v[x], 1e-14);
    }
  }
  EXPECT_LE(static_cast<int64_t>(r.z_tuples.size()), int64_t{1} << (q - 1));

  const auto rep = verify_upgrade_consistency(r, j);
  EXPECT_LE(rep.sum_residual, 1e-12);
  EXPECT_LE(rep.marginal_residual, 1e-12);
  EXPECT_LE(rep.markov_residual, 1e-12);
  EXPECT_LE(rep.embedding_residual, 1e-12);
  EXPECT_LE(rep.assembly_residual, 1e-12);
  EXPECT_TRUE(rep.passed(1e-10));
}

INSTANTIATE_TEST_SUITE_P(Seeds, UpgradeToy, ::testing::Range(1, 21));

TEST(Upgrade, IdentityWhenBudgetCoversOutputs) {
  const auto j = random_channel(3, 4, 5);
  const auto r = upgrade(j, 16);
  EXPECT_EQ(r.delta_I, 0.0);
  const auto rep = verify_upgrade_consistency(r, j);
  EXPECT_LE(rep.marginal_residual, 1e-15);
  EXPECT_LE(rep.markov_residual, 1e-15);
  // A relabeling: every output keeps a tuple of its own.
  ASSERT_EQ(r.z_tuples.size(), 4u);
  for (int y = 0; y < 4; ++y) {
    std::vector<int> z;
    for (const auto& o : r.coordinates) z.push_back(o.beta_map[y].left);
    const auto it = std::find(r.z_tuples.begin(), r.z_tuples.end(), z);
    ASSERT_NE(it, r.z_tuples.end());
    const int c = static_cast<int>(it - r.z_tuples.begin());
    for (int x = 0; x < 3; ++x) EXPECT_NEAR(r.pstar_xz.at(x, c), j.at(x, y), 1e-15);
  }
}

TEST(Upgrade, BudgetTooSmall) {
  const auto j = random_channel(3, 20, 5);
  EXPECT_EQ(code_of([&] { upgrade(j, 3); }), ErrorCode::kBudgetTooSmall);
  EXPECT_NO_THROW(upgrade(j, 4));
}

TEST(Upgrade, BinaryReducesToGreedySplit) {
  const auto j = random_channel(2, 64, 12);
  const auto r = upgrade(j, 6);
  const auto b = greedy_split(to_binary_view(j), 6);
  EXPECT_EQ(r.delta_I, b.delta_I);
  ASSERT_EQ(r.pstar_xz.n(), b.pstar_xz.n());
  for (int z = 0; z < b.pstar_xz.n(); ++z) {
    EXPECT_EQ(r.pstar_xz.at(0, z), b.pstar_xz.at(0, z));
    EXPECT_EQ(r.pstar_xz.at(1, z), b.pstar_xz.at(1, z));
  }
}

TEST(Upgrade, Q2L4MarginalResidual) {
  const auto j = random_channel(2, 30, 77);
  const auto r = upgrade(j, 4);
  EXPECT_LE(verify_upgrade_consistency(r, j).marginal_residual, 1e-12);
}

TEST(Upgrade, BoundAndMarginals) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const int q = 3 + static_cast<int>(seed % 3);
    const auto j = random_channel(q, 200, seed);
    for (int64_t lam : {2, 3, 5}) {
      int64_t L = 1;
      for (int i = 0; i < q - 1; ++i) L *= lam;
      const auto r = upgrade(j, L);
      EXPECT_GE(r.delta_I, -1e-10);
      EXPECT_LE(r.delta_I, r.bound);
      EXPECT_LE(static_cast<int64_t>(r.z_tuples.size()), L);
      const auto px = j.input_marginal();
      const auto ppx = r.pstar_xz.input_marginal();
      for (int x = 0; x < q; ++x) EXPECT_NEAR(ppx[x], px[x], 1e-10);
    }
  }
}

TEST(Upgrade, VerifyIsSizeGated) {
  const auto j = random_channel(12, 600, 1);
  const auto r = upgrade(j, int64_t{1} << 11);
  EXPECT_EQ(code_of([&] { verify_upgrade_consistency(r, j); }), ErrorCode::kTooLarge);
}

TEST(ApplyQuantizer, Examples) {
  const auto j = random_channel(3, 6, 2);
  const auto same = apply_quantizer(j, {0, 1, 2, 3, 4, 5});
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 6; ++y) EXPECT_EQ(same.at(x, y), j.at(x, y));
  }
  const auto one = apply_quantizer(j, {0, 0, 0, 0, 0, 0});
  EXPECT_EQ(one.n(), 1);
  EXPECT_EQ(mutual_information(one), 0.0);
  EXPECT_EQ(code_of([&] { apply_quantizer(j, {0, 1}); }), ErrorCode::kPartialQuantizer);
  EXPECT_EQ(code_of([&] { apply_quantizer(j, {0, 2, 2, 2, 2, 2}); }),
            ErrorCode::kPartialQuantizer);
}

TEST(Degrade, ToyMatchesDirectAggregation) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const auto j = random_channel(3, 12, seed);
    const auto r = degrade(j, 9);
    // Direct sum over y of P(x, y) * prod_i 1{f_i(y) = t_i}.
    for (size_t c = 0; c < r.z_tuples.size(); ++c) {
      for (int x = 0; x < 3; ++x) {
        double s = 0.0;
        for (int y = 0; y < j.n(); ++y) {
          bool hit = true;
          for (int i = 0; i < 2; ++i) hit = hit && r.coordinates[i].quantizer[y] == r.z_tuples[c][i];
          if (hit) s += j.at(x, y);
        }
        EXPECT_NEAR(r.pxz.at(x, static_cast<int>(c)), s, 1e-15);
      }
    }
    EXPECT_NEAR(r.delta_I, testing::ref_mi(testing::to_table(j)) -
                               testing::ref_mi(testing::to_table(r.pxz)), 1e-12);
  }
}

TEST(Degrade, BoundsAndCoordinateDominance) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const int q = 3 + static_cast<int>(seed % 3);
    const auto j = random_channel(q, 150, seed + 50);
    const auto chain = build_alpha_chain(j);
    for (int64_t lam : {1, 2, 3, 6}) {
      int64_t L = 1;
      for (int i = 0; i < q - 1; ++i) L *= lam;
      const auto r = degrade(j, L);
      EXPECT_GE(r.delta_I, -1e-12);
      EXPECT_LE(r.delta_I, r.bound);
      EXPECT_LE(static_cast<int64_t>(r.z_tuples.size()), L);
      double sum = 0.0;
      for (int i = 0; i < q - 1; ++i) {
        sum += chain.link(i).conditioning_mass * r.coordinates[i].delta_I;
      }
      EXPECT_LE(r.delta_I, sum + 1e-10);
    }
  }
}

TEST(Degrade, InjectiveWhenBudgetCoversOutputs) {
  const auto j = random_channel(3, 5, 5);
  const auto r = degrade(j, 25);
  EXPECT_EQ(r.delta_I, 0.0);
  EXPECT_EQ(r.pxz.n(), 5);
}

TEST(Degrade, BinaryReducesToGreedyMerge) {
  const auto j = random_channel(2, 64, 21);
  const auto r = degrade(j, 5);
  const auto b = greedy_merge(to_binary_view(j), 5);
  EXPECT_EQ(r.delta_I, b.delta_I);
  for (int y = 0; y < j.n(); ++y) EXPECT_EQ(r.quantizer[y], b.quantizer[y]);
  for (int c = 0; c < b.pxz.n(); ++c) {
    EXPECT_EQ(r.pxz.at(0, c), b.pxz.at(0, c));
    EXPECT_EQ(r.pxz.at(1, c), b.pxz.at(1, c));
  }
}

TEST(Degrade, BudgetTooSmall) {
  EXPECT_EQ(code_of([] { degrade(random_channel(3, 5, 1), 0); }), ErrorCode::kBudgetTooSmall);
}

}  // namespace
}  // namespace chanreduce
