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

#include "chanreduce/bounds.h"

#include <string>

#include "chanreduce/error.h"
#include "chanreduce/onehot_common.h"

namespace chanreduce {
namespace {

struct KindName {
  BoundKind kind;
  std::string_view name;
};

constexpr KindName kNames[] = {
    {BoundKind::kBinaryUp, "binary-up"},     {BoundKind::kBinaryDown, "binary-down"},
    {BoundKind::kOneHotUp, "onehot-up"},     {BoundKind::kOneHotDown, "onehot-down"},
    {BoundKind::kPerStepUp, "per-step-up"},  {BoundKind::kPerStepDown, "per-step-down"},
};

[[noreturn]] void out_of_range(BoundKind kind, int64_t L) {
  throw ChannelError(ErrorCode::kOutOfRange, std::string(bound_kind_name(kind)) +
                                                 " bound undefined for L = " +
                                                 std::to_string(L));
}

}  // namespace

std::string_view bound_kind_name(BoundKind kind) {
  for (const auto& k : kNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (const auto& k : kNames) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

BoundReport bound_report(BoundKind kind, int q, int64_t L) {
  if (q < 2) {
    throw ChannelError(ErrorCode::kOutOfRange, "bounds need q >= 2");
  }
  BoundReport r{kind, q, L, L, 0.0};
  const double l = static_cast<double>(L);
  switch (kind) {
    case BoundKind::kBinaryUp:
      if (L < 2) out_of_range(kind, L);
      r.value = 128.0 / (l * l);
      break;
    case BoundKind::kBinaryDown:
      if (L < 1) out_of_range(kind, L);
      r.value = 64.0 / (l * l);
      break;
    case BoundKind::kPerStepUp:
      if (L < 3) out_of_range(kind, L);
      r.value = 256.0 / (l * l * l);
      break;
    case BoundKind::kPerStepDown:
      if (L < 2) out_of_range(kind, L);
      r.value = 128.0 / (l * l * l);
      break;
    case BoundKind::kOneHotUp:
    case BoundKind::kOneHotDown: {
      if (L < 1) out_of_range(kind, L);
      r.lambda = lambda_of(L, q);
      const bool up = kind == BoundKind::kOneHotUp;
      if (up && r.lambda < 2) out_of_range(kind, L);
      const double lam = static_cast<double>(r.lambda);
      r.value = (up ? 128.0 : 64.0) * (q - 1) / (lam * lam);
      break;
    }
  }
  return r;
}

double bound(BoundKind kind, int q, int64_t L) { return bound_report(kind, q, L).value; }

}  // namespace chanreduce
