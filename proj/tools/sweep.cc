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

#include "sweep.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "chanreduce/channel_io.h"
#include "chanreduce/error.h"
#include "chanreduce/information.h"
#include "chanreduce/onehot_degrade.h"
#include "chanreduce/onehot_upgrade.h"

namespace chanreduce::cli {

const char* mode_name(Mode m) { return m == Mode::kUpgrade ? "upgrade" : "degrade"; }

namespace {

SweepRecord run_one(const JointDistribution& joint, Mode mode, int64_t L) {
  SweepRecord r;
  r.L_design = L;
  r.mode = mode;
  r.q = joint.q();
  const auto start = std::chrono::steady_clock::now();
  try {
    if (mode == Mode::kUpgrade) {
      const auto res = upgrade(joint, L);
      r.L_actual = res.pstar_xz.n();
      r.delta_I = res.delta_I;
      r.bound = res.bound;
    } else {
      const auto res = degrade(joint, L);
      r.L_actual = res.pxz.n();
      r.delta_I = res.delta_I;
      r.bound = res.bound;
    }
  } catch (const ChannelError& e) {
    r.error = e.what();
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const JointDistribution& joint, Mode mode,
                                   std::vector<int64_t> L_list, int jobs) {
  std::stable_sort(L_list.begin(), L_list.end());
  std::vector<SweepRecord> rows(L_list.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < L_list.size(); i = next++) rows[i] = run_one(joint, mode, L_list[i]);
  };
  const int n = std::clamp<int>(jobs, 1, static_cast<int>(std::max<size_t>(1, L_list.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRecord>& rows, bool bits, bool timing) {
  auto units = [&](double v) { return format_double(bits ? nats_to_bits(v) : v); };
  std::string out = "L_design,L_actual,delta_I,bound,mode,q,elapsed_ms\n";
  for (const auto& r : rows) {
    out += std::to_string(r.L_design) + ",";
    out += (r.delta_I ? std::to_string(r.L_actual) : std::string()) + ",";
    out += (r.delta_I ? units(*r.delta_I) : std::string()) + ",";
    out += (r.bound ? units(*r.bound) : std::string()) + ",";
    out += std::string(mode_name(r.mode)) + "," + std::to_string(r.q) + ",";
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::optional<double> loglog_slope(const std::vector<SweepRecord>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : rows) {
    if (!r.delta_I || !(*r.delta_I > 0.0) || r.L_actual < 1) continue;
    const double x = std::log(static_cast<double>(r.L_actual));
    const double y = std::log(*r.delta_I);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double den = n * sxx - sx * sx;
  if (n < 2 || !(den > 1e-12 * n * sxx)) return std::nullopt;
  return (n * sxy - sx * sy) / den;
}

}  // namespace chanreduce::cli
