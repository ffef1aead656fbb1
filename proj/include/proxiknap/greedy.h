// Copyright 2026 The Proxiknap Authors
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

// Maximal prefix greedy solutions and the weight partitions built around the
// break item.

#ifndef PROXIKNAP_GREEDY_H_
#define PROXIKNAP_GREEDY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "proxiknap/model.h"

namespace proxiknap {

// A greedy solution together with the item list its counts refer to. When the
// greedy took some but not all copies of the break item, that item is split
// into a fully-taken pseudo-item followed by a residual break item with zero
// selected copies, so `instance` may have one more item than the input.
struct GreedySolution {
  KnapsackInstance instance;
  // source[i] is the index, in the instance passed to the constructing
  // routine, of the item instance.items[i] came from.
  std::vector<size_t> source;
  std::vector<int64_t> counts;
  std::optional<size_t> break_index;
  bool split_applied = false;

  int64_t SelectedWeight() const;
  int64_t SelectedProfit() const;
  // Collapses split items back onto the constructing instance's indices.
  std::vector<int64_t> CountsBySource(size_t source_size) const;
};

// Takes items in order, all copies while they fit; at the first item whose
// copies do not all fit it takes as many as fit and stops. Requires a
// normalized instance for the knapsack proximity guarantees, but runs on any
// item order.
GreedySolution GreedyPrefix(const KnapsackInstance& instance);

// Reorders equal-efficiency items strictly left of the break item by weight
// ascending and strictly right of it by weight descending. Counts, the break
// index and the split flag are carried along unchanged.
GreedySolution ApplyBreakTieOrder(const GreedySolution& greedy);

enum class PartitionScheme { kBaseline, kTwoWay, kThreeWay };

const char* SchemeName(PartitionScheme scheme);

struct PartitionConfig {
  PartitionScheme scheme = PartitionScheme::kThreeWay;
  double c_a = 1.0;
  double c_b = 1.0;
};

struct WeightClass {
  std::vector<int64_t> weights;  // sorted ascending
  int64_t bound = 0;             // U_j, an upper bound on Delta over the class
  bool capped = false;           // bound equals the unconditional cap
};

struct WeightPartition {
  std::vector<WeightClass> classes;  // sorted by (bound, smallest weight)
  PartitionScheme scheme = PartitionScheme::kBaseline;
  int64_t unconditional_cap = 0;     // min(2 * w_max^2, t)
};

// ceil(log2(max(w_max, 2))).
int64_t CeilLog2(int64_t w_max);

// Threshold helpers; all round up.
int64_t TwoWayDistinctThreshold(int64_t w_max, double c_a);    // 2 cA w^1/2 log w
int64_t ThreeWayDistinctThreshold(int64_t w_max, double c_a);  // 2 cA w^3/5 log w
int64_t FrequentCopyThreshold(int64_t w_max);                  // 2 w^1/5
int64_t FrequentWeightThreshold(int64_t w_max, double c_a);    // 2 cA w^2/5 log^2 w

// Splits the distinct weights of greedy.instance into classes with Delta
// bounds according to `config.scheme`. The greedy solution should already be
// tie-ordered by ApplyBreakTieOrder.
WeightPartition ComputePartition(const GreedySolution& greedy,
                                 const PartitionConfig& config);

// Returns a copy with every non-capped bound doubled (and re-capped).
WeightPartition DoubleBounds(const WeightPartition& partition);

// Every class bound raised to the unconditional cap.
WeightPartition CapAllBounds(const WeightPartition& partition);

bool AllBoundsCapped(const WeightPartition& partition);

// The subset-sum greedy of the dense regime. The `threshold` largest distinct
// weights each contribute one forced copy; the `threshold` smallest each keep
// one copy out of reach; the remaining copies are then added in pair order
// while they fit. Counts are indexed like instance.pairs.
struct DenseGreedySolution {
  GreedySolution greedy;
  std::vector<int64_t> forced_weights;    // W_2
  std::vector<int64_t> reserved_weights;  // W_3
};

// Throws PreconditionError if 2 * threshold exceeds the number of distinct
// weights or the forced copies alone exceed the target. Expects distinct
// weights (NormalizeSubsetSum).
DenseGreedySolution DenseGreedy(const SubsetSumInstance& instance,
                                int64_t threshold);

// Greedy prefix over the pairs in their given order, profit == weight.
GreedySolution SubsetSumPrefix(const SubsetSumInstance& instance);

}  // namespace proxiknap

#endif  // PROXIKNAP_GREEDY_H_
