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

#include "proxiknap/greedy.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "proxiknap/errors.h"
#include "proxiknap/model.h"
#include "proxiknap/rng.h"
#include "test_util.h"

namespace proxiknap {
namespace {

void ExpectPrefixInvariants(const GreedySolution& greedy) {
  const std::vector<Item>& items = greedy.instance.items;
  const size_t b = greedy.break_index.value_or(items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    EXPECT_EQ(greedy.counts[i], i < b ? items[i].multiplicity : 0);
  }
  EXPECT_LE(greedy.SelectedWeight(), greedy.instance.capacity);
  if (greedy.break_index.has_value()) {
    EXPECT_GT(greedy.SelectedWeight() + items[b].weight,
              greedy.instance.capacity);
  }
}

TEST(GreedyPrefixTest, StopsAtBreakItem) {
  const KnapsackInstance instance{{{2, 6, 2}, {3, 6, 1}, {4, 4, 2}}, 8};
  const GreedySolution greedy = GreedyPrefix(instance);
  EXPECT_EQ(greedy.counts, (std::vector<int64_t>{2, 1, 0}));
  ASSERT_TRUE(greedy.break_index.has_value());
  EXPECT_EQ(*greedy.break_index, 2u);
  EXPECT_FALSE(greedy.split_applied);
  ExpectPrefixInvariants(greedy);
}

TEST(GreedyPrefixTest, EverythingFits) {
  const KnapsackInstance instance{{{2, 6, 2}, {3, 6, 1}}, 100};
  const GreedySolution greedy = GreedyPrefix(instance);
  EXPECT_EQ(greedy.counts, (std::vector<int64_t>{2, 1}));
  EXPECT_FALSE(greedy.break_index.has_value());
}

TEST(GreedyPrefixTest, SplitsPartiallyTakenBreakItem) {
  const KnapsackInstance instance{{{3, 9, 4}}, 7};
  const GreedySolution greedy = GreedyPrefix(instance);
  ASSERT_EQ(greedy.instance.items.size(), 2u);
  EXPECT_TRUE(greedy.split_applied);
  EXPECT_EQ(greedy.instance.items[0], (Item{3, 9, 2}));
  EXPECT_EQ(greedy.instance.items[1], (Item{3, 9, 2}));
  EXPECT_EQ(greedy.counts, (std::vector<int64_t>{2, 0}));
  EXPECT_EQ(*greedy.break_index, 1u);
  EXPECT_EQ(greedy.CountsBySource(1), std::vector<int64_t>{2});
  ExpectPrefixInvariants(greedy);
}

TEST(GreedyPrefixTest, RandomInvariants) {
  CounterRng rng(17);
  for (int rep = 0; rep < 1000; ++rep) {
    const KnapsackInstance raw = testing::RandomKnapsack(rng, 15, 12, 20, 6);
    ExpectPrefixInvariants(
        GreedyPrefix(NormalizeKnapsack(raw.items, raw.capacity)));
  }
}

TEST(ApplyBreakTieOrderTest, ReordersTiesOnEachSide) {
  // Left of b: weights 4, 2 at efficiency 2 become 2, 4. Right of b: weights
  // 2, 4 at efficiency 1 become 4, 2.
  const KnapsackInstance instance{
      {{4, 8, 1}, {2, 4, 1}, {5, 5, 1}, {2, 2, 1}, {4, 4, 1}}, 7};
  const GreedySolution greedy = GreedyPrefix(instance);
  ASSERT_EQ(*greedy.break_index, 2u);
  const GreedySolution ordered = ApplyBreakTieOrder(greedy);
  std::vector<int64_t> weights;
  for (const Item& item : ordered.instance.items) weights.push_back(item.weight);
  EXPECT_EQ(weights, (std::vector<int64_t>{2, 4, 5, 4, 2}));
  EXPECT_EQ(ordered.break_index, greedy.break_index);
  EXPECT_EQ(ordered.counts, greedy.counts);
}

TEST(ApplyBreakTieOrderTest, PreservesCountsAndBreak) {
  CounterRng rng(19);
  for (int rep = 0; rep < 1000; ++rep) {
    // Few distinct efficiencies to force ties.
    KnapsackInstance raw;
    const int64_t n = UniformInt(rng, 1, 12);
    int64_t total = 0;
    for (int64_t i = 0; i < n; ++i) {
      const int64_t w = UniformInt(rng, 1, 8);
      const Item item{w, w * UniformInt(rng, 1, 3), UniformInt(rng, 1, 4)};
      total += item.weight * item.multiplicity;
      raw.items.push_back(item);
    }
    raw.capacity = UniformInt(rng, 0, total);
    const GreedySolution greedy =
        GreedyPrefix(NormalizeKnapsack(raw.items, raw.capacity));
    const GreedySolution ordered = ApplyBreakTieOrder(greedy);
    EXPECT_EQ(ordered.break_index, greedy.break_index);
    EXPECT_EQ(ordered.CountsBySource(raw.items.size()),
              greedy.CountsBySource(raw.items.size()));
    ExpectPrefixInvariants(ordered);
  }
}

std::set<int64_t> UnionOf(const WeightPartition& partition) {
  std::set<int64_t> all;
  for (const WeightClass& c : partition.classes) {
    for (int64_t w : c.weights) EXPECT_TRUE(all.insert(w).second);
  }
  return all;
}

TEST(ComputePartitionTest, BaselineIsSingleCappedClass) {
  const KnapsackInstance instance{{{2, 6, 2}, {3, 6, 1}, {4, 4, 2}}, 8};
  const GreedySolution greedy = ApplyBreakTieOrder(GreedyPrefix(instance));
  const WeightPartition partition =
      ComputePartition(greedy, {PartitionScheme::kBaseline, 1, 1});
  ASSERT_EQ(partition.classes.size(), 1u);
  EXPECT_EQ(partition.unconditional_cap, 8);  // min(2 * 16, 8)
  EXPECT_EQ(partition.classes[0].bound, 8);
  EXPECT_TRUE(partition.classes[0].capped);
  EXPECT_EQ(partition.classes[0].weights, (std::vector<int64_t>{2, 3, 4}));
}

TEST(ComputePartitionTest, ExhaustedScanPutsEverythingInStar) {
  const KnapsackInstance instance{{{2, 6, 2}, {3, 6, 1}, {4, 4, 2}}, 8};
  const GreedySolution greedy = ApplyBreakTieOrder(GreedyPrefix(instance));
  const WeightPartition partition =
      ComputePartition(greedy, {PartitionScheme::kTwoWay, 1, 1});
  ASSERT_EQ(partition.classes.size(), 1u);
  EXPECT_EQ(partition.classes[0].weights, (std::vector<int64_t>{2, 3, 4}));
  EXPECT_TRUE(partition.classes[0].capped);
}

// 40 distinct weights, 20 on each side of the break item.
GreedySolution FortyWeights() {
  std::vector<Item> items;
  for (int64_t w = 1; w <= 40; ++w) {
    // Efficiency decreases with w: weights 1..20 are taken, 21.. are not.
    items.push_back({w, 1000 - w, 1});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return CompareEfficiency(a, b) > 0;
  });
  KnapsackInstance instance{items, 210};  // 1 + ... + 20 = 210
  return ApplyBreakTieOrder(GreedyPrefix(instance));
}

TEST(ComputePartitionTest, TwoWayThresholdCountsDistinctWeights) {
  const GreedySolution greedy = FortyWeights();
  ASSERT_EQ(*greedy.break_index, 20u);
  // w_max = 40: threshold = ceil(2 cA sqrt(40) * 6); choose cA for 10.
  const double c_a = 9.5 / (2.0 * std::sqrt(40.0) * 6.0);
  ASSERT_EQ(TwoWayDistinctThreshold(40, c_a), 10);
  const WeightPartition partition =
      ComputePartition(greedy, {PartitionScheme::kTwoWay, c_a, 0.01});
  ASSERT_EQ(partition.classes.size(), 2u);
  // The non-star class has the small bound and comes first.
  const WeightClass& outside = partition.classes[0];
  const WeightClass& star = partition.classes[1];
  EXPECT_EQ(star.weights.size(), 20u);
  EXPECT_EQ(star.weights.front(), 11);
  EXPECT_EQ(star.weights.back(), 30);
  EXPECT_EQ(outside.weights.size(), 20u);
  EXPECT_EQ(outside.bound, 11);  // ceil(4 * 0.01 * 40^1.5)
  EXPECT_EQ(star.bound, partition.unconditional_cap);
  EXPECT_EQ(UnionOf(partition).size(), 40u);
}

TEST(ComputePartitionTest, ThreeWayFindsFrequentWeights) {
  // w_max = 32: frequent at >= ceil(2 * 32^0.2) = 4 copies.
  ASSERT_EQ(FrequentCopyThreshold(32), 4);
  std::vector<Item> items;
  for (int64_t w = 1; w <= 32; ++w) {
    items.push_back({w, 1000 - w, w % 4 == 0 ? 5 : 1});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return CompareEfficiency(a, b) > 0;
  });
  const GreedySolution greedy =
      ApplyBreakTieOrder(GreedyPrefix(KnapsackInstance{items, 200}));
  const WeightPartition partition =
      ComputePartition(greedy, {PartitionScheme::kThreeWay, 1.0, 0.001});
  EXPECT_EQ(UnionOf(partition).size(), 32u);
  // Every weight is in W* (threshold exceeds 32); W+ holds the multiples
  // of four.
  std::vector<int64_t> plus;
  for (const WeightClass& c : partition.classes) {
    if (c.capped) plus = c.weights;
  }
  EXPECT_EQ(plus, (std::vector<int64_t>{4, 8, 12, 16, 20, 24, 28, 32}));
  for (size_t j = 1; j < partition.classes.size(); ++j) {
    EXPECT_LE(partition.classes[j - 1].bound, partition.classes[j].bound);
  }
}

TEST(ComputePartitionTest, RandomPartitionsAreValid) {
  CounterRng rng(23);
  for (int rep = 0; rep < 500; ++rep) {
    const KnapsackInstance raw = testing::RandomKnapsack(rng, 30, 40, 30, 8);
    const GreedySolution greedy = ApplyBreakTieOrder(
        GreedyPrefix(NormalizeKnapsack(raw.items, raw.capacity)));
    for (PartitionScheme scheme :
         {PartitionScheme::kBaseline, PartitionScheme::kTwoWay,
          PartitionScheme::kThreeWay}) {
      const double c = 0.05 + 0.1 * (rep % 10);
      const WeightPartition partition = ComputePartition(greedy, {scheme, c, c});
      const std::vector<int64_t> distinct = greedy.instance.DistinctWeights();
      const std::set<int64_t> all = UnionOf(partition);
      EXPECT_EQ(std::vector<int64_t>(all.begin(), all.end()), distinct);
      for (size_t j = 0; j < partition.classes.size(); ++j) {
        EXPECT_LE(partition.classes[j].bound, partition.unconditional_cap);
        if (j > 0) {
          EXPECT_LE(partition.classes[j - 1].bound,
                    partition.classes[j].bound);
        }
      }
    }
  }
}

TEST(DoubleBoundsTest, DoublesUntilCapped) {
  WeightPartition partition;
  partition.unconditional_cap = 50;
  partition.classes = {{{1}, 7, false}, {{2}, 50, true}};
  WeightPartition doubled = DoubleBounds(partition);
  EXPECT_EQ(doubled.classes[0].bound, 14);
  EXPECT_FALSE(AllBoundsCapped(doubled));
  doubled = DoubleBounds(DoubleBounds(doubled));
  EXPECT_EQ(doubled.classes[0].bound, 50);
  EXPECT_TRUE(AllBoundsCapped(doubled));
  EXPECT_TRUE(AllBoundsCapped(CapAllBounds(partition)));
}

TEST(DenseGreedyTest, ThresholdOne) {
  const SubsetSumInstance instance{{{1, 3}, {5, 2}, {9, 1}}, 12};
  const DenseGreedySolution dense = DenseGreedy(instance, 1);
  EXPECT_EQ(dense.forced_weights, std::vector<int64_t>{9});
  EXPECT_EQ(dense.reserved_weights, std::vector<int64_t>{1});
  // 9 forced; then 1s (two, keeping one reserved) fill 11; no 5 fits.
  EXPECT_EQ(dense.greedy.counts, (std::vector<int64_t>{2, 0, 1}));
}

TEST(DenseGreedyTest, Preconditions) {
  const SubsetSumInstance instance{{{1, 3}, {5, 2}, {9, 1}}, 5};
  EXPECT_THROW(DenseGreedy(instance, 2), PreconditionError);
  EXPECT_THROW(DenseGreedy(instance, 1), PreconditionError);  // 9 > 5
}

TEST(DenseGreedyTest, MaximalAndFeasible) {
  CounterRng rng(29);
  int checked = 0;
  while (checked < 1000) {
    SubsetSumInstance raw = testing::RandomSubsetSum(rng, 20, 30, 5);
    const SubsetSumInstance instance =
        NormalizeSubsetSum(raw.pairs, raw.target);
    const int64_t threshold =
        UniformInt(rng, 0, static_cast<int64_t>(instance.pairs.size()) / 2);
    std::vector<int64_t> weights;
    for (const WeightCount& p : instance.pairs) weights.push_back(p.weight);
    std::sort(weights.rbegin(), weights.rend());
    int64_t forced = 0;
    for (int64_t k = 0; k < threshold; ++k) forced += weights[k];
    if (forced > instance.target) continue;
    ++checked;
    const DenseGreedySolution dense = DenseGreedy(instance, threshold);
    const GreedySolution& g = dense.greedy;
    const int64_t selected = g.SelectedWeight();
    EXPECT_LE(selected, instance.target);
    const std::set<int64_t> reserved(dense.reserved_weights.begin(),
                                     dense.reserved_weights.end());
    for (size_t i = 0; i < instance.pairs.size(); ++i) {
      const WeightCount& p = instance.pairs[i];
      const int64_t limit = p.multiplicity - (reserved.contains(p.weight) ? 1 : 0);
      EXPECT_LE(g.counts[i], limit);
      if (g.counts[i] < limit) {
        EXPECT_GT(selected + p.weight, instance.target);
      }
    }
    for (int64_t w : dense.forced_weights) {
      for (size_t i = 0; i < instance.pairs.size(); ++i) {
        if (instance.pairs[i].weight == w) {
          EXPECT_GE(g.counts[i], 1);
        }
      }
    }
  }
}

TEST(CeilLog2Test, Values) {
  EXPECT_EQ(CeilLog2(1), 1);
  EXPECT_EQ(CeilLog2(2), 1);
  EXPECT_EQ(CeilLog2(3), 2);
  EXPECT_EQ(CeilLog2(512), 9);
  EXPECT_EQ(CeilLog2(513), 10);
}

}  // namespace
}  // namespace proxiknap
