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

// Acceptance checks. One line per criterion; exit status 1 if any fails.
// Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "chanreduce/chanreduce.h"

namespace {

using namespace chanreduce;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double h2(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_joint(const JointDistribution& a, const JointDistribution& b) {
  if (a.q() != b.q() || a.n() != b.n() || a.labels() != b.labels()) return false;
  const auto ma = a.mass();
  const auto mb = b.mass();
  return std::memcmp(ma.data(), mb.data(), ma.size() * sizeof(double)) == 0;
}

// Binary ensemble shared by the first three criteria.
constexpr int kBinaryChannels = 200;
constexpr int kBinaryOutputs = 512;
constexpr uint64_t kBinarySeed = 1000;
const std::vector<int> kBinaryBudgets{2, 4, 8, 16, 32, 64, 128, 256};

BinaryPosteriorChannel binary_instance(int i) {
  return to_binary_view(random_channel(2, kBinaryOutputs, kBinarySeed + i));
}

struct EnsembleStats {
  double worst = -std::numeric_limits<double>::infinity();  // delta_I - bound
  double worst_step = -std::numeric_limits<double>::infinity();  // cost - per-step bound
  long runs = 0;
  long steps = 0;
  double seconds = 0.0;
};

EnsembleStats split_ensemble() {
  EnsembleStats s;
  const auto start = Clock::now();
  for (int i = 0; i < kBinaryChannels; ++i) {
    const auto view = binary_instance(i);
    for (int L : kBinaryBudgets) {
      const auto out = greedy_split(view, L);
      s.worst = std::max(s.worst, out.delta_I - 128.0 / (double(L) * L));
      for (const auto& st : out.steps) {
        const double m = st.size_before;
        s.worst_step = std::max(s.worst_step, st.cost - 256.0 / (m * m * m));
        ++s.steps;
      }
      ++s.runs;
    }
  }
  s.seconds = seconds_since(start);
  return s;
}

EnsembleStats merge_ensemble() {
  EnsembleStats s;
  const auto start = Clock::now();
  for (int i = 0; i < kBinaryChannels; ++i) {
    const auto view = binary_instance(i);
    for (int L : kBinaryBudgets) {
      const auto out = greedy_merge(view, L);
      s.worst = std::max(s.worst, out.delta_I - 64.0 / (double(L) * L));
      for (const auto& st : out.steps) {
        const double m = st.size_before;
        s.worst_step = std::max(s.worst_step, st.cost - 128.0 / (m * m * m));
        ++s.steps;
      }
      ++s.runs;
    }
  }
  s.seconds = seconds_since(start);
  return s;
}

Verdict binary_upgrade_bound() {
  const auto s = split_ensemble();
  return {s.worst <= 1e-12 && s.seconds < 30.0,
          fmt("%ld runs, max delta_I - 128/L^2 = %.3e, %.2f s", s.runs, s.worst, s.seconds)};
}

Verdict binary_degrade_bound() {
  const auto s = merge_ensemble();
  return {s.worst <= 1e-12 && s.seconds < 30.0,
          fmt("%ld runs, max delta_I - 64/L^2 = %.3e, %.2f s", s.runs, s.worst, s.seconds)};
}

Verdict per_step_bounds() {
  const auto up = split_ensemble();
  const auto down = merge_ensemble();
  return {up.worst_step <= 1e-12 && down.worst_step <= 1e-12,
          fmt("%ld splits, max cost - 256/m^3 = %.3e; %ld merges, max cost - 128/m^3 = %.3e",
              up.steps, up.worst_step, down.steps, down.worst_step)};
}

// Grid shared by the one-hot bound criteria.
template <typename Run>
Verdict onehot_grid(double constant, Run run) {
  double worst = -std::numeric_limits<double>::infinity();
  int runs = 0;
  bool lambda_ok = true;
  for (int q = 3; q <= 5; ++q) {
    for (int i = 0; i < 50; ++i) {
      const auto j = random_channel(q, 500, 2000 + 100 * q + i);
      for (int lambda = 2; lambda <= 8; ++lambda) {
        int64_t L = 1;
        for (int k = 0; k < q - 1; ++k) L *= lambda;
        const auto [delta_I, got_lambda] = run(j, L);
        lambda_ok = lambda_ok && got_lambda == lambda;
        worst = std::max(worst, delta_I - constant * (q - 1) / (double(lambda) * lambda));
        ++runs;
      }
    }
  }
  return {worst <= 1e-10 && lambda_ok,
          fmt("%d runs, max delta_I - bound = %.3e%s", runs, worst,
              lambda_ok ? "" : ", per-coordinate budget mismatch")};
}

Verdict onehot_upgrade_bound() {
  return onehot_grid(128.0, [](const JointDistribution& j, int64_t L) {
    const auto r = upgrade(j, L);
    return std::pair<double, int64_t>(r.delta_I, r.lambda);
  });
}

Verdict onehot_degrade_bound() {
  return onehot_grid(64.0, [](const JointDistribution& j, int64_t L) {
    const auto r = degrade(j, L);
    return std::pair<double, int64_t>(r.delta_I, r.lambda);
  });
}

Verdict upgrade_joint_structure() {
  Xoshiro256 rng(3000);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int q = 2 + static_cast<int>(rng.next() % 2);
    const int n = 2 + static_cast<int>(rng.next() % 5);
    const auto j = random_channel(q, n, rng.next());
    const int64_t L = q == 2 ? 2 : 4;
    const auto rep = verify_upgrade_consistency(upgrade(j, L), j);
    worst = std::max({worst, rep.sum_residual, rep.marginal_residual, rep.markov_residual,
                      rep.embedding_residual});
  }
  return {worst <= 1e-10, fmt("100 instances, max residual = %.3e", worst)};
}

Verdict bound_curve_values() {
  struct Point {
    BoundKind kind;
    int64_t L;
    double expected_bits;
  };
  const Point points[] = {
      {BoundKind::kOneHotUp, 10, 41.036658940841626},
      {BoundKind::kOneHotDown, 10, 20.518329470420813},
      {BoundKind::kOneHotUp, 30, 14.773197218702986},
      {BoundKind::kOneHotDown, 30, 7.386598609351493},
  };
  double worst = 0.0;
  std::string values;
  for (const auto& p : points) {
    const double bits = nats_to_bits(bound(p.kind, 3, p.L));
    worst = std::max(worst, std::fabs(bits - p.expected_bits));
    values += fmt("%s%.6f", values.empty() ? "" : " ", bits);
  }
  return {worst <= 1e-3, fmt("bits = %s, max error = %.3e", values.c_str(), worst)};
}

// Least-squares slope of log y against log x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Verdict power_law() {
  const auto start = Clock::now();
  const auto j = hard_grid_channel(3, 400);
  std::vector<double> L_up, d_up, L_down, d_down;
  for (int lambda = 2; lambda <= 16; ++lambda) {
    const int64_t L = int64_t{lambda} * lambda;
    const auto u = upgrade(j, L);
    const auto d = degrade(j, L);
    if (u.delta_I > 0.0) {
      L_up.push_back(u.pstar_xz.n());
      d_up.push_back(u.delta_I);
    }
    if (d.delta_I > 0.0) {
      L_down.push_back(d.pxz.n());
      d_down.push_back(d.delta_I);
    }
  }
  const double seconds = seconds_since(start);
  if (L_up.size() < 2 || L_down.size() < 2) return {false, "fewer than two positive points"};
  const double up = fit_slope(L_up, d_up);
  const double down = fit_slope(L_down, d_down);
  auto in_range = [](double s) { return s >= -1.25 && s <= -0.85; };
  return {in_range(up) && in_range(down) && seconds < 300.0,
          fmt("|Y| = %d, slope upgrade = %.4f, degrade = %.4f, %.1f s", j.n(), up, down,
              seconds)};
}

// Smallest information loss over all partitions of the sorted entries into at
// most L intervals.
double exhaustive_interval_loss(const BinaryPosteriorChannel& v, int L) {
  const int n = v.size();
  double base = 0.0;
  for (const auto& e : v.entries()) base += e.mass * h2(e.posterior);
  double best = std::numeric_limits<double>::infinity();
  for (uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    if (std::popcount(cuts) + 1 > L) continue;
    double h = 0.0, s = 0.0, z = 0.0;
    for (int k = 0; k < n; ++k) {
      s += v.entries()[k].mass;
      z += v.entries()[k].mass * v.entries()[k].posterior;
      if (k == n - 1 || (cuts >> k & 1u)) {
        h += s * h2(std::min(1.0, z / s));
        s = z = 0.0;
      }
    }
    best = std::min(best, h - base);
  }
  return best;
}

Verdict oracle_dominance() {
  Xoshiro256 rng(4000);
  double worst_dp = -std::numeric_limits<double>::infinity();
  double worst_bound = -std::numeric_limits<double>::infinity();
  double worst_exhaustive = 0.0;
  int exhaustive_cases = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(rng.next() % 63);
    const int L = 1 + static_cast<int>(rng.next() % 8);
    const auto view = to_binary_view(random_channel(2, n, rng.next()));
    const double dp = dp_optimal_degrade(view, L).delta_I;
    const double greedy = greedy_merge(view, L).delta_I;
    worst_dp = std::max(worst_dp, dp - greedy);
    worst_bound = std::max(worst_bound, greedy - 64.0 / (double(L) * L));
    if (n <= 10) {
      worst_exhaustive = std::max(worst_exhaustive, std::fabs(dp - exhaustive_interval_loss(view, L)));
      ++exhaustive_cases;
    }
  }
  return {worst_dp <= 1e-12 && worst_bound <= 1e-12 && worst_exhaustive <= 1e-12,
          fmt("500 instances, max dp - greedy = %.3e, max greedy - 64/L^2 = %.3e, "
              "|dp - exhaustive| <= %.3e over %d cases",
              worst_dp, worst_bound, worst_exhaustive, exhaustive_cases)};
}

Verdict gap_analytics() {
  Xoshiro256 rng(5000);
  constexpr int kSide = 100;
  double worst_lemma = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < kSide; ++a) {
    for (int b = 0; b < kSide; ++b) {
      double p0 = (a + rng.uniform()) / kSide;
      double p1 = (b + rng.uniform()) / kSide;
      if (p0 > p1) std::swap(p0, p1);
      const double limit = lemma_bound(p0, p1);
      for (int c = 0; c < kSide; ++c) {
        const double alpha = (c + rng.uniform()) / kSide;
        worst_lemma = std::max(worst_lemma, concavity_gap(p0, p1, alpha) - limit);
      }
    }
  }
  double worst_witness = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng.next() % 1000);
    std::vector<double> p(n + 1);
    for (auto& v : p) v = rng.uniform();
    std::sort(p.begin(), p.end());
    const double w = sphere_packing_witness(p).value;
    worst_witness = std::max(worst_witness, w - 8.0 / ((n + 1.0) * (n + 1.0)));
  }
  return {worst_lemma <= 0.0 && worst_witness <= 0.0,
          fmt("1e6 grid points, max gap - bound = %.3e; 1000 vectors, max witness - 8/(n+1)^2 "
              "= %.3e",
              worst_lemma, worst_witness)};
}

Verdict degrade_scaling() {
  const auto small = random_channel(3, 100000, 6000);
  const auto large = random_channel(3, 200000, 6001);
  double t_small = std::numeric_limits<double>::infinity();
  double t_large = t_small;
  for (int rep = 0; rep < 7; ++rep) {
    auto start = Clock::now();
    degrade(small, 64);
    t_small = std::min(t_small, seconds_since(start));
    start = Clock::now();
    degrade(large, 64);
    t_large = std::min(t_large, seconds_since(start));
  }
  const double ratio = t_large / t_small;
  return {ratio <= 2.5, fmt("q = 3, L = 64, best of 7: %.1f ms vs %.1f ms, ratio = %.3f",
                            1e3 * t_large, 1e3 * t_small, ratio)};
}

Verdict binary_consistency() {
  Xoshiro256 rng(7000);
  int mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng.next() % 299);
    const int L = 2 + static_cast<int>(rng.next() % 63);
    const auto j = random_channel(2, n, rng.next());
    const auto view = to_binary_view(j);

    const auto one_up = upgrade(j, L);
    const auto bin_up = greedy_split(view, L);
    const bool up_ok = same_bits(one_up.delta_I, bin_up.delta_I) &&
                       same_joint(one_up.pstar_xz, bin_up.pstar_xz);

    const auto one_down = degrade(j, L);
    const auto bin_down = greedy_merge(view, L);
    const bool down_ok = same_bits(one_down.delta_I, bin_down.delta_I) &&
                         one_down.quantizer == bin_down.quantizer &&
                         same_joint(one_down.pxz, bin_down.pxz);
    if (!up_ok || !down_ok) ++mismatches;
  }
  return {mismatches == 0, fmt("100 channels, %d mismatches", mismatches)};
}

struct Criterion {
  int id;
  const char* name;
  Verdict (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion criteria[] = {
      {1, "binary upgrade bound", binary_upgrade_bound},
      {2, "binary degrade bound", binary_degrade_bound},
      {3, "per-step bounds", per_step_bounds},
      {4, "one-hot upgrade bound", onehot_upgrade_bound},
      {5, "one-hot degrade bound", onehot_degrade_bound},
      {6, "upgrade joint structure", upgrade_joint_structure},
      {7, "bound curve values", bound_curve_values},
      {8, "power law slope", power_law},
      {9, "oracle dominance", oracle_dominance},
      {10, "concavity gap analytics", gap_analytics},
      {11, "degrade scaling", degrade_scaling},
      {12, "q = 2 reduction consistency", binary_consistency},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("%s criterion %d: %s (%s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
