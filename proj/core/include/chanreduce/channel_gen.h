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

#ifndef CHANREDUCE_CHANNEL_GEN_H_
#define CHANREDUCE_CHANNEL_GEN_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "chanreduce/joint_distribution.h"

namespace chanreduce {

// xoshiro256** (Blackman and Vigna, 2018) seeded by four SplitMix64 outputs
// of the 64-bit seed. uniform() is (next() >> 11) * 2^-53 shifted by half a
// step, so it never returns 0 or 1. Bit-reproducible on every platform.
class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed);

  uint64_t next();
  double uniform();
  double exponential();  // -ln U

 private:
  uint64_t s_[4];
};

// Outputs are the compositions a of M into q non-negative parts, in
// lexicographic order, each with mass 1/N; P(X = x | a) = a_x / M. Labels are
// "a1-a2-...". Throws kTooLarge when N > kHardGridCap.
inline constexpr int64_t kHardGridCap = 5'000'000;
JointDistribution hard_grid_channel(int q, int M);

// n outputs of mass 1/n each; posteriors uniform on the simplex
// (normalized exponentials).
JointDistribution random_channel(int q, int n, uint64_t seed);

enum class NamedChannel { kNoiseless, kUseless };
// noiseless: identity with uniform input; useless: a single output.
JointDistribution named_channel(NamedChannel kind, int q);

// "hard-grid:q:M", "random:q:n:seed", "noiseless:q", "useless:q" or
// "custom-file:path". Throws kParse.
struct GeneratorSpec {
  std::string kind;
  int q = 0;
  int64_t param = 0;
  uint64_t seed = 0;
  std::string path;

  static GeneratorSpec parse(std::string_view text);
  std::string to_string() const;
};

JointDistribution generate(const GeneratorSpec& spec);

}  // namespace chanreduce

#endif  // CHANREDUCE_CHANNEL_GEN_H_
