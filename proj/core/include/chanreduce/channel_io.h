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

#ifndef CHANREDUCE_CHANNEL_IO_H_
#define CHANREDUCE_CHANNEL_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "chanreduce/joint_distribution.h"

namespace chanreduce {

// {"q": int, "labels": [string...], "pxy": [[float...]...]}, one row per input
// letter. Validation and pruning as in JointDistribution::from_mass. Throws
// kParse on malformed documents.
JointDistribution parse_channel_json(std::string_view text);
JointDistribution read_channel_json(const std::string& path);
std::string channel_json(const JointDistribution& joint);

// "x,y,p" with 1-based x, the output label as y, one row per positive entry.
std::string joint_csv(const JointDistribution& joint);

// "y,z" with 1-based cluster ids.
std::string binary_quantizer_csv(const std::vector<std::string>& labels,
                                 const std::vector<int>& quantizer);

// "y,z1,...,z{d},z_id": per output, the 1-based cluster of every coordinate
// and the 1-based id of the combined tuple.
std::string onehot_quantizer_csv(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<int>>& tuples,
                                 const std::vector<int>& quantizer);

// Shortest text that reads back to the same double.
std::string format_double(double v);

// Reads a whole file; throws kParse if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace chanreduce

#endif  // CHANREDUCE_CHANNEL_IO_H_
