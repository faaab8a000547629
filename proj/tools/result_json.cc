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

#include "result_json.h"

#include <nlohmann/json.hpp>

namespace chanreduce::cli {
namespace {

using nlohmann::json;

json header(const char* mode, int q, int64_t L, int64_t lambda, double delta_I, double bound,
            int L_actual) {
  return json{{"mode", mode},       {"units", "nats"},   {"q", q},
              {"L", L},             {"lambda", lambda},  {"L_actual", L_actual},
              {"delta_I", delta_I}, {"bound", bound}};
}

// Sparse (x, z-tuple, p) triplets with 1-based x and tuple components.
json triplets(const JointDistribution& j, const std::vector<std::vector<int>>& tuples) {
  json out = json::array();
  for (int x = 0; x < j.q(); ++x) {
    for (int c = 0; c < j.n(); ++c) {
      const double p = j.at(x, c);
      if (p <= 0.0) continue;
      std::vector<int> z(tuples[c]);
      for (int& v : z) ++v;
      out.push_back(json::array({x + 1, z, p}));
    }
  }
  return out;
}

}  // namespace

std::string upgrade_json(const OneHotUpgradeResult& r) {
  json doc = header("upgrade", r.q, r.L, r.lambda, r.delta_I, r.bound, r.pstar_xz.n());
  doc["pxz"] = triplets(r.pstar_xz, r.z_tuples);
  json coords = json::array();
  for (size_t i = 0; i < r.coordinates.size(); ++i) {
    const auto& o = r.coordinates[i];
    std::vector<double> post, mass;
    for (const auto& s : o.survivors) {
      post.push_back(s.posterior);
      mass.push_back(s.mass);
    }
    coords.push_back(json{{"index", i + 1},
                          {"splits", o.steps.size()},
                          {"delta_I", o.delta_I},
                          {"surviving_posteriors", post},
                          {"surviving_masses", mass}});
  }
  doc["coordinates"] = std::move(coords);
  return doc.dump(1) + "\n";
}

std::string degrade_json(const OneHotDegradeResult& r) {
  json doc = header("degrade", r.q, r.L, r.lambda, r.delta_I, r.bound, r.pxz.n());
  doc["pxz"] = triplets(r.pxz, r.z_tuples);
  json coords = json::array();
  for (size_t i = 0; i < r.coordinates.size(); ++i) {
    const auto& o = r.coordinates[i];
    std::vector<double> post, mass;
    for (const auto& c : o.clusters) {
      post.push_back(c.posterior);
      mass.push_back(c.mass);
    }
    coords.push_back(json{{"index", i + 1},
                          {"merges", o.steps.size()},
                          {"delta_I", o.delta_I},
                          {"cluster_posteriors", post},
                          {"cluster_masses", mass}});
  }
  doc["coordinates"] = std::move(coords);
  return doc.dump(1) + "\n";
}

}  // namespace chanreduce::cli
