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

#include "chanreduce/onehot_common.h"

#include <string>

#include "chanreduce/error.h"

namespace chanreduce {

std::vector<int> one_hot(int x, int q) {
  if (q < 2 || x < 1 || x > q) {
    throw ChannelError(ErrorCode::kOutOfRange, "one_hot: letter outside 1..q");
  }
  std::vector<int> bits(q - 1, 0);
  if (x < q) bits[x - 1] = 1;
  return bits;
}

int64_t lambda_of(int64_t L, int q) {
  if (L < 1 || q < 2) {
    throw ChannelError(ErrorCode::kOutOfRange, "lambda_of needs L >= 1 and q >= 2");
  }
  const int e = q - 1;
  // b^e <= L without overflow: stop multiplying once the product exceeds L.
  auto fits = [&](int64_t b) {
    int64_t p = 1;
    for (int i = 0; i < e; ++i) {
      if (p > L / b) return false;
      p *= b;
    }
    return p <= L;
  };
  int64_t lo = 1, hi = L;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

BinaryPosteriorChannel AlphaChain::view(int i, bool coalesce) const {
  return BinaryPosteriorChannel::from_table(links_[i].one, links_[i].zero, coalesce);
}

AlphaChain build_alpha_chain(const JointDistribution& joint) {
  const int q = joint.q();
  const int n = joint.n();
  // Tail sums T_i(y) = P(X >= i, Y = y) accumulated from the last letter up,
  // so every T is a sum of non-negative terms.
  std::vector<std::vector<double>> tail(q);
  tail[q - 1].assign(joint.row(q - 1).begin(), joint.row(q - 1).end());
  for (int x = q - 2; x >= 0; --x) {
    tail[x] = tail[x + 1];
    const auto row = joint.row(x);
    for (int y = 0; y < n; ++y) tail[x][y] += row[y];
  }

  std::vector<AlphaLink> links(q - 1);
  for (int i = 0; i < q - 1; ++i) {
    double m = 1.0;
    if (i > 0) {
      m = 0.0;
      for (double t : tail[i]) m += t;
    }
    if (!(m > 0.0)) {
      throw ChannelError(ErrorCode::kDegenerateTail,
                         "P(X >= " + std::to_string(i + 1) + ") vanishes");
    }
    AlphaLink& link = links[i];
    link.conditioning_mass = m;
    link.one.resize(n);
    link.zero.resize(n);
    const auto row = joint.row(i);
    for (int y = 0; y < n; ++y) {
      link.one[y] = row[y] / m;
      link.zero[y] = tail[i + 1][y] / m;
    }
  }
  return AlphaChain(std::move(links), std::move(tail[0]));
}

}  // namespace chanreduce
