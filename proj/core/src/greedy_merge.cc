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

#include "chanreduce/greedy_merge.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <utility>

#include "chanreduce/error.h"
#include "chanreduce/information.h"

namespace chanreduce {
namespace {

// Merge cost of two clusters given their accumulated (mass, mass * posterior).
double pair_cost(double mi, double zi, double mj, double zj) {
  const double m = mi + mj;
  const double center = (zi + zj) / m;
  return mixing_gap(mi, zi / mi, mj, zj / mj, center);
}

// Clusters in posterior order as a linked list. Each record carries the cost
// of merging with its successor; a segment tree over blocks of records holds
// the minimum (cost, left cluster), so a merge rescans one or two blocks next
// to the merged pair and walks a tree that stays in cache.
class ClusterChain {
 public:
  explicit ClusterChain(const std::vector<PosteriorEntry>& entries) {
    const int n = static_cast<int>(entries.size());
    cl_.resize(n);
    for (int k = 0; k < n; ++k) {
      cl_[k] = {entries[k].mass, entries[k].mass * entries[k].posterior, kNoPair, k - 1,
                k + 1 < n ? k + 1 : -1};
    }
    for (int k = 0; k + 1 < n; ++k) cl_[k].cost = pair_cost_at(k);
    const size_t blocks = (cl_.size() + kBlock - 1) / kBlock;
    leaves_ = std::bit_ceil(std::max<size_t>(blocks, 1));
    tree_.assign(2 * leaves_, kEmpty);
    for (size_t b = 0; b < blocks; ++b) tree_[leaves_ + b] = scan(b);
    for (size_t i = leaves_ - 1; i >= 1; --i) tree_[i] = pick(tree_[2 * i], tree_[2 * i + 1]);
  }

  double top_cost() const { return tree_[1].cost; }
  int top_left() const { return tree_[1].left; }
  int next(int k) const { return cl_[k].next; }

  // Merges the cheapest pair into its left cluster.
  void merge_top() {
    const int l = top_left();
    Cluster& a = cl_[l];
    const int r = a.next;
    Cluster& b = cl_[r];
    a.mass += b.mass;
    a.zero += b.zero;
    a.next = b.next;
    if (b.next >= 0) cl_[b.next].prev = l;
    set_cost(r, kNoPair);
    set_cost(l, a.next >= 0 ? pair_cost_at(l) : kNoPair);
    if (a.prev >= 0) set_cost(a.prev, pair_cost_at(a.prev));
  }

 private:
  static constexpr size_t kBlock = 16;
  static constexpr double kNoPair = std::numeric_limits<double>::infinity();
  struct Cluster {
    double mass;
    double zero;  // mass * posterior
    double cost;  // merging with next; kNoPair when there is none
    int prev;
    int next;
  };
  struct Node {
    double cost;
    int left;
  };
  static constexpr Node kEmpty{kNoPair, std::numeric_limits<int>::max()};

  double pair_cost_at(int l) const {
    const Cluster& a = cl_[l];
    const Cluster& b = cl_[a.next];
    return pair_cost(a.mass, a.zero, b.mass, b.zero);
  }
  static Node pick(const Node& a, const Node& b) {
    return (b.cost < a.cost || (b.cost == a.cost && b.left < a.left)) ? b : a;
  }
  Node scan(size_t block) const {
    Node best = kEmpty;
    const size_t end = std::min(cl_.size(), (block + 1) * kBlock);
    for (size_t k = block * kBlock; k < end; ++k) {
      if (cl_[k].cost < best.cost) best = {cl_[k].cost, static_cast<int>(k)};
    }
    return best;
  }
  void set_cost(int k, double cost) {
    cl_[k].cost = cost;
    const size_t block = static_cast<size_t>(k) / kBlock;
    size_t i = leaves_ + block;
    tree_[i] = scan(block);
    for (i /= 2; i >= 1; i /= 2) {
      const Node up = pick(tree_[2 * i], tree_[2 * i + 1]);
      if (up.cost == tree_[i].cost && up.left == tree_[i].left) break;
      tree_[i] = up;
    }
  }

  std::vector<Cluster> cl_;
  size_t leaves_ = 1;
  std::vector<Node> tree_;
};

}  // namespace

double merge_cost(double mass_i, double p_i, double mass_j, double p_j) {
  if (!(mass_i > 0.0 && mass_j > 0.0)) {
    throw ChannelError(ErrorCode::kZeroMass, "merge_cost needs positive masses");
  }
  const double center = (mass_i * p_i + mass_j * p_j) / (mass_i + mass_j);
  return mixing_gap(mass_i, p_i, mass_j, p_j, center);
}

DegradeOutcome degrade_outcome_from_clusters(const BinaryPosteriorChannel& view,
                                             std::vector<int> cluster_of_entry) {
  DegradeOutcome out;
  out.cluster_of_entry = std::move(cluster_of_entry);
  const int k = out.cluster_of_entry.empty() ? 0 : out.cluster_of_entry.back() + 1;
  std::vector<double> mass(k, 0.0), zero(k, 0.0);
  for (int y = 0; y < view.source_size(); ++y) {
    const int c = view.entry_of_source()[y];
    if (c < 0) continue;
    mass[out.cluster_of_entry[c]] += view.source_mass(y);
    zero[out.cluster_of_entry[c]] += view.bit_zero()[y];
  }
  for (int c = 0; c < k; ++c) out.clusters.push_back({mass[c], zero[c] / mass[c]});

  out.quantizer.resize(view.source_size());
  for (int y = 0; y < view.source_size(); ++y) {
    const int c = view.entry_of_source()[y];
    out.quantizer[y] = c >= 0 ? out.cluster_of_entry[c] : 0;
  }
  const std::vector<double> source = view.source_table();
  std::vector<double> table = aggregate_columns(source, 2, view.source_size(), out.quantizer, k);
  std::vector<std::string> labels;
  for (int c = 0; c < k; ++c) labels.push_back(std::to_string(c + 1));
  out.delta_I = k == view.size() ? 0.0
                                 : mutual_information(source, 2, view.source_size()) -
                                       mutual_information(table, 2, k);
  out.pxz = JointDistribution::from_mass(2, std::move(labels), std::move(table));
  return out;
}

DegradeOutcome greedy_merge(const BinaryPosteriorChannel& view, int L) {
  if (L < 1) {
    throw ChannelError(ErrorCode::kBudgetTooSmall,
                       "degrading needs L >= 1, got " + std::to_string(L));
  }
  const int n = view.size();
  ClusterChain chain(view.entries());
  std::vector<MergeStep> steps;
  double cost_sum = 0.0;
  if (n > L) steps.reserve(n - L);
  for (int count = n; count > L; --count) {
    const double cost = chain.top_cost();
    steps.push_back({count, chain.top_left(), cost});
    cost_sum += cost;
    chain.merge_top();
  }

  // Entry 0 always heads the list; every survivor absorbed the entries up to
  // its successor.
  std::vector<int> cluster_of_entry(n);
  int c = 0;
  for (int k = n > 0 ? 0 : -1; k >= 0; k = chain.next(k), ++c) {
    const int end = chain.next(k) >= 0 ? chain.next(k) : n;
    std::fill(cluster_of_entry.begin() + k, cluster_of_entry.begin() + end, c);
  }
  DegradeOutcome out = degrade_outcome_from_clusters(view, std::move(cluster_of_entry));
  out.steps = std::move(steps);
  out.cost_sum = cost_sum;
  return out;
}

}  // namespace chanreduce
