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

#ifndef CHANREDUCE_ERROR_H_
#define CHANREDUCE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace chanreduce {

enum class ErrorCode {
  kNonStochastic,
  kNegativeEntry,
  kDegenerateInput,
  kOutOfRange,
  kDivergenceInfinite,
  kNotBinary,
  kNotSorted,
  kBudgetTooSmall,
  kExtremeRemoved,
  kZeroMass,
  kDegenerateTail,
  kSupportTooLarge,
  kPartialQuantizer,
  kTooLargeForOracle,
  kTooLarge,
  kParse,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// Every precondition violation in the library is reported through this type.
class ChannelError : public std::runtime_error {
 public:
  ChannelError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chanreduce

#endif  // CHANREDUCE_ERROR_H_
