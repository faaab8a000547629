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

#ifndef CHANREDUCE_TOOLS_CLI_H_
#define CHANREDUCE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace chanreduce::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,       // verify violation or failed sweep point
  kExitParse = 2,         // bad flags or unreadable channel
  kExitPrecondition = 3,  // valid input outside an algorithm's domain
};

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chanreduce::cli

#endif  // CHANREDUCE_TOOLS_CLI_H_
