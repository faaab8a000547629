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

#ifndef CHANREDUCE_CHANREDUCE_H_
#define CHANREDUCE_CHANREDUCE_H_

#include "chanreduce/binary_view.h"
#include "chanreduce/bounds.h"
#include "chanreduce/channel_gen.h"
#include "chanreduce/channel_io.h"
#include "chanreduce/error.h"
#include "chanreduce/greedy_merge.h"
#include "chanreduce/greedy_split.h"
#include "chanreduce/information.h"
#include "chanreduce/joint_distribution.h"
#include "chanreduce/onehot_common.h"
#include "chanreduce/onehot_degrade.h"
#include "chanreduce/onehot_upgrade.h"
#include "chanreduce/oracles.h"

#endif  // CHANREDUCE_CHANREDUCE_H_
