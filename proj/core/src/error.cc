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

#include "chanreduce/error.h"

namespace chanreduce {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonStochastic: return "NonStochastic";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDivergenceInfinite: return "DivergenceInfinite";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kBudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::kExtremeRemoved: return "ExtremeRemoved";
    case ErrorCode::kZeroMass: return "ZeroMass";
    case ErrorCode::kDegenerateTail: return "DegenerateTail";
    case ErrorCode::kSupportTooLarge: return "SupportTooLarge";
    case ErrorCode::kPartialQuantizer: return "PartialQuantizer";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace chanreduce
