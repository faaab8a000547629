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

#include <benchmark/benchmark.h>

#include "chanreduce/chanreduce.h"

namespace {

using chanreduce::random_channel;
using chanreduce::to_binary_view;

void BM_GreedySplit(benchmark::State& state) {
  const auto view = to_binary_view(random_channel(2, static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(chanreduce::greedy_split(view, 64));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedySplit)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_GreedyMerge(benchmark::State& state) {
  const auto view = to_binary_view(random_channel(2, static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(chanreduce::greedy_merge(view, 64));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyMerge)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_OneHotUpgrade(benchmark::State& state) {
  const auto joint = random_channel(static_cast<int>(state.range(1)),
                                    static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(chanreduce::upgrade(joint, 64));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OneHotUpgrade)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 17, 4), {3, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_OneHotDegrade(benchmark::State& state) {
  const auto joint = random_channel(static_cast<int>(state.range(1)),
                                    static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(chanreduce::degrade(joint, 64));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OneHotDegrade)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 17, 4), {3, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_HardGridSweep(benchmark::State& state) {
  const auto joint = chanreduce::hard_grid_channel(3, static_cast<int>(state.range(0)));
  const int64_t L = state.range(1) * state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(chanreduce::degrade(joint, L));
}
BENCHMARK(BM_HardGridSweep)->Args({100, 4})->Args({200, 8})->Args({400, 16})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
