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

#include "suites.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include <nlohmann/json.hpp>

#include "chanreduce/binary_view.h"
#include "chanreduce/bounds.h"
#include "chanreduce/channel_gen.h"
#include "chanreduce/channel_io.h"
#include "chanreduce/error.h"
#include "chanreduce/greedy_merge.h"
#include "chanreduce/greedy_split.h"
#include "chanreduce/information.h"
#include "chanreduce/onehot_degrade.h"
#include "chanreduce/onehot_upgrade.h"
#include "chanreduce/oracles.h"

namespace chanreduce::cli {
namespace {

using nlohmann::json;

// Collects invariants of one suite and remembers the first violation.
class Checker {
 public:
  explicit Checker(std::string suite) { report_.suite = std::move(suite); }

  int add(std::string name, double tolerance) {
    report_.invariants.push_back({std::move(name), -1e300, tolerance, 0});
    return static_cast<int>(report_.invariants.size()) - 1;
  }

  void observe(int id, double residual, const std::function<json()>& instance) {
    auto& inv = report_.invariants[id];
    ++inv.cases;
    if (std::isnan(residual)) residual = 1e300;
    inv.max_residual = std::max(inv.max_residual, residual);
    if (residual > inv.tolerance && report_.offending.empty()) {
      json doc = instance();
      doc["suite"] = report_.suite;
      doc["invariant"] = inv.name;
      doc["residual"] = residual;
      report_.offending = doc.dump();
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

json channel_doc(const JointDistribution& j) { return json::parse(channel_json(j)); }

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

SuiteReport lemma_suite(const SuiteOptions& o) {
  Checker c("lemma");
  const int lemma = c.add("concavity_gap <= lemma_bound", 0.0);
  // Jittered grid: side^3 cells, one seeded point per cell.
  const int64_t points = o.points > 0 ? o.points : 1'000'000;
  const int side = std::max(1, static_cast<int>(std::llround(std::cbrt(static_cast<double>(points)))));
  Xoshiro256 rng(o.seed);
  for (int i = 0; i < side; ++i) {
    for (int k = 0; k < side; ++k) {
      for (int a = 0; a < side; ++a) {
        double p0 = (i + rng.uniform()) / side;
        double p1 = (k + rng.uniform()) / side;
        const double alpha = (a + rng.uniform()) / side;
        if (p0 > p1) std::swap(p0, p1);
        const double r = concavity_gap(p0, p1, alpha) - lemma_bound(p0, p1);
        c.observe(lemma, r, [&] { return json{{"p0", p0}, {"p1", p1}, {"alpha", alpha}}; });
      }
    }
  }
  return c.take();
}

SuiteReport sphere_suite(const SuiteOptions& o) {
  Checker c("sphere");
  const int witness = c.add("witness <= 8/(n+1)^2", 0.0);
  const int scan = c.add("|sup_gap - grid scan|", 1e-8);
  const int instances = pick(o.instances, 1000);
  const int max_n = pick(o.max_outputs, 1000);
  Xoshiro256 rng(o.seed);
  for (int t = 0; t < instances; ++t) {
    const int n = 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(max_n));
    std::vector<double> p(n + 1);
    for (auto& v : p) v = rng.uniform();
    std::sort(p.begin(), p.end());
    const Witness w = sphere_packing_witness(p);
    const double limit = 8.0 / ((n + 1.0) * (n + 1.0));
    c.observe(witness, w.value - limit, [&] { return json{{"posteriors", p}}; });
  }
  for (int t = 0; t < 20; ++t) {
    double p0 = rng.uniform(), p1 = rng.uniform();
    if (p0 > p1) std::swap(p0, p1);
    double best = 0.0;
    for (int k = 0; k <= 10000; ++k) best = std::max(best, concavity_gap(p0, p1, k / 1e4));
    c.observe(scan, std::fabs(sup_gap(p0, p1).value - best),
              [&] { return json{{"p0", p0}, {"p1", p1}}; });
  }
  return c.take();
}

SuiteReport claims_suite(const SuiteOptions& o) {
  Checker c("claims");
  const int sum = c.add("P* sums to 1", 1e-10);
  const int markov = c.add("X - Z - Y Markov", 1e-10);
  const int marginal = c.add("P* marginalizes to P(x,y)", 1e-10);
  const int embed = c.add("sub-problem embedding", 1e-10);
  const int assembly = c.add("sparse assembly = materialized sum", 1e-10);
  const int gain = c.add("delta_I <= bound", 1e-10);
  const int instances = pick(o.instances, 100);
  const int max_q = pick(o.q, 3);
  const int max_n = pick(o.max_outputs, 6);
  const int lambda = pick(o.lambda, 2);
  Xoshiro256 rng(o.seed);
  for (int t = 0; t < instances; ++t) {
    const int q = 2 + static_cast<int>(rng.next() % static_cast<uint64_t>(std::max(1, max_q - 1)));
    const int n = 2 + static_cast<int>(rng.next() % static_cast<uint64_t>(std::max(1, max_n - 1)));
    const uint64_t seed = rng.next();
    const auto j = random_channel(q, n, seed);
    int64_t L = 1;
    for (int i = 0; i < q - 1; ++i) L *= lambda;
    const auto r = upgrade(j, L);
    const auto rep = verify_upgrade_consistency(r, j);
    auto inst = [&] { return json{{"channel", channel_doc(j)}, {"L", L}}; };
    c.observe(sum, rep.sum_residual, inst);
    c.observe(markov, rep.markov_residual, inst);
    c.observe(marginal, rep.marginal_residual, inst);
    c.observe(embed, rep.embedding_residual, inst);
    c.observe(assembly, rep.assembly_residual, inst);
    c.observe(gain, rep.delta_I - rep.bound, inst);
  }
  return c.take();
}

SuiteReport bounds_suite(const SuiteOptions& o) {
  Checker c("bounds");
  const int up = c.add("binary upgrade <= 128/L^2", 1e-12);
  const int down = c.add("binary degrade <= 64/L^2", 1e-12);
  const int step_up = c.add("split step <= 256/m^3", 1e-12);
  const int step_down = c.add("merge step <= 128/m^3", 1e-12);
  const int sign = c.add("upgrade gains, degrade loses", 1e-12);
  const int oh_up = c.add("one-hot upgrade <= 128(q-1)/Lambda^2", 1e-10);
  const int oh_down = c.add("one-hot degrade <= 64(q-1)/Lambda^2", 1e-10);
  const int instances = pick(o.instances, 20);
  const int n = pick(o.max_outputs, 512);
  Xoshiro256 rng(o.seed);
  for (int t = 0; t < instances; ++t) {
    const uint64_t seed = rng.next();
    const auto j = random_channel(2, n, seed);
    const auto v = to_binary_view(j);
    for (int L = 2; L <= 256; L *= 2) {
      auto inst = [&] { return json{{"generator", "random:2:" + std::to_string(n) + ":" + std::to_string(seed)}, {"L", L}}; };
      const auto su = greedy_split(v, L);
      const auto md = greedy_merge(v, L);
      c.observe(up, su.delta_I - bound(BoundKind::kBinaryUp, 2, L), inst);
      c.observe(down, md.delta_I - bound(BoundKind::kBinaryDown, 2, L), inst);
      c.observe(sign, std::max(-su.delta_I, -md.delta_I), inst);
      for (const auto& s : su.steps) {
        c.observe(step_up, s.cost - bound(BoundKind::kPerStepUp, 2, s.size_before), inst);
      }
      for (const auto& s : md.steps) {
        c.observe(step_down, s.cost - bound(BoundKind::kPerStepDown, 2, s.size_before), inst);
      }
    }
  }
  for (int q = 3; q <= std::max(3, pick(o.q, 5)); ++q) {
    for (int t = 0; t < std::max(1, instances / 4); ++t) {
      const uint64_t seed = rng.next();
      const auto j = random_channel(q, 500, seed);
      for (int64_t lam = 2; lam <= 8; ++lam) {
        int64_t L = 1;
        for (int i = 0; i < q - 1; ++i) L *= lam;
        auto inst = [&] { return json{{"generator", "random:" + std::to_string(q) + ":500:" + std::to_string(seed)}, {"L", L}}; };
        const auto u = upgrade(j, L);
        const auto d = degrade(j, L);
        c.observe(oh_up, u.delta_I - u.bound, inst);
        c.observe(oh_down, d.delta_I - d.bound, inst);
        c.observe(sign, std::max(-u.delta_I, -d.delta_I), inst);
      }
    }
  }
  return c.take();
}

SuiteReport oracle_suite(const SuiteOptions& o) {
  Checker c("oracle");
  const int dominance = c.add("dp_optimal <= greedy_merge", 1e-12);
  const int bnd = c.add("greedy_merge <= 64/L^2", 1e-12);
  const int exact = c.add("|dp - exhaustive| (|Y| <= 10)", 1e-12);
  const int instances = pick(o.instances, 500);
  const int max_n = pick(o.max_outputs, 64);
  Xoshiro256 rng(o.seed);
  for (int t = 0; t < instances; ++t) {
    const int n = 2 + static_cast<int>(rng.next() % static_cast<uint64_t>(std::max(1, max_n - 1)));
    const int L = 1 + static_cast<int>(rng.next() % 8);
    const uint64_t seed = rng.next();
    const auto j = random_channel(2, n, seed);
    const auto v = to_binary_view(j);
    auto inst = [&] { return json{{"channel", channel_doc(j)}, {"L", L}}; };
    const auto g = greedy_merge(v, L);
    const auto dp = dp_optimal_degrade(v, L);
    c.observe(dominance, dp.delta_I - g.delta_I, inst);
    c.observe(bnd, g.delta_I - bound(BoundKind::kBinaryDown, 2, L), inst);
    if (v.size() <= 10) {
      // Every set of cut points between entries.
      double best = 1e300;
      const int k = v.size();
      for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        if (std::popcount(mask) + 1 > L) continue;
        std::vector<int> cl(k);
        for (int e = 1; e < k; ++e) cl[e] = cl[e - 1] + ((mask >> (e - 1)) & 1);
        best = std::min(best, degrade_outcome_from_clusters(v, cl).delta_I);
      }
      c.observe(exact, std::fabs(dp.delta_I - best), inst);
    }
  }
  return c.take();
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(invariants.begin(), invariants.end(),
                     [](const InvariantResult& r) { return r.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma", "sphere", "claims", "bounds", "oracle"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  static const std::map<std::string, SuiteReport (*)(const SuiteOptions&)> suites{
      {"lemma", lemma_suite},   {"sphere", sphere_suite}, {"claims", claims_suite},
      {"bounds", bounds_suite}, {"oracle", oracle_suite},
  };
  const auto it = suites.find(name);
  if (it == suites.end()) throw ChannelError(ErrorCode::kParse, "unknown suite '" + name + "'");
  return it->second(options);
}

std::string format_report(const SuiteReport& report) {
  std::string out;
  char buf[64];
  for (const auto& inv : report.invariants) {
    std::snprintf(buf, sizeof buf, "%.6g", inv.cases ? inv.max_residual : 0.0);
    out += "invariant=\"" + inv.name + "\" max_residual=" + buf;
    std::snprintf(buf, sizeof buf, "%.3g", inv.tolerance);
    out += " tolerance=" + std::string(buf) + " cases=" + std::to_string(inv.cases) +
           " status=" + (inv.passed() ? "pass" : "fail") + "\n";
  }
  out += "suite=" + report.suite + " status=" + (report.passed() ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace chanreduce::cli
