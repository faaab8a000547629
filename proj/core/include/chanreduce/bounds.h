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

#ifndef CHANREDUCE_BOUNDS_H_
#define CHANREDUCE_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace chanreduce {

enum class BoundKind {
  kBinaryUp,      // 128 / L^2
  kBinaryDown,    // 64 / L^2
  kOneHotUp,      // 128 (q-1) / Lambda^2
  kOneHotDown,    // 64 (q-1) / Lambda^2
  kPerStepUp,     // 256 / m^3, L read as the size m before the step
  kPerStepDown,   // 128 / m^3
};

struct BoundReport {
  BoundKind kind;
  int q;
  int64_t L;
  int64_t lambda;  // budget per coordinate; L for the binary and per-step kinds
  double value;    // nats
};

std::string_view bound_kind_name(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);

// Throws kOutOfRange outside each formula's range: L >= 2 for upgrading,
// L >= 1 for degrading, Lambda >= 2 for one-hot upgrading, q >= 2.
BoundReport bound_report(BoundKind kind, int q, int64_t L);
double bound(BoundKind kind, int q, int64_t L);

}  // namespace chanreduce

#endif  // CHANREDUCE_BOUNDS_H_
