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

#ifndef CHANREDUCE_TOOLS_RESULT_JSON_H_
#define CHANREDUCE_TOOLS_RESULT_JSON_H_

#include <string>

#include "chanreduce/onehot_degrade.h"
#include "chanreduce/onehot_upgrade.h"

namespace chanreduce::cli {

// Canonical result documents, always in nats. Timing is left out so that
// repeated runs write identical files.
std::string upgrade_json(const OneHotUpgradeResult& r);
std::string degrade_json(const OneHotDegradeResult& r);

}  // namespace chanreduce::cli

#endif  // CHANREDUCE_TOOLS_RESULT_JSON_H_
