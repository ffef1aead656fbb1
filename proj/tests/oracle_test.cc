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

#include "proxiknap/oracle.h"

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "gtest/gtest.h"
#include "proxiknap/errors.h"
#include "proxiknap/greedy.h"
#include "proxiknap/rng.h"
#include "test_util.h"

namespace proxiknap {
namespace {

TEST(DpKnapsackTest, SmallExamples) {
  const KnapsackInstance a{{{3, 4, 1}, {2, 3, 2}}, 5};
  EXPECT_EQ(DpKnapsack(a).value, 7);
  const KnapsackInstance b{{{2, 6, 2}, {3, 6, 1}, {4, 4, 2}}, 8};
  const OptResult result = DpKnapsack(b);
  EXPECT_EQ(result.value, 18);
  EXPECT_TRUE(IsFeasibleWitness(b, result));
}

TEST(DpKnapsackTest, ZeroCapacity) {
  const KnapsackInstance instance{{{1, 5, 3}, {2, 7, 1}}, 0};
  const OptResult result = DpKnapsack(instance);
  EXPECT_EQ(result.value, 0);
  EXPECT_EQ(result.solution, (std::vector<int64_t>{0, 0}));
}

TEST(DpKnapsackTest, ResourceCap) {
  const KnapsackInstance instance{{{1, 1, 1}}, 50'000'000};
  EXPECT_THROW(DpKnapsack(instance), ResourceLimitError);
}

TEST(DpKnapsackTest, EnvironmentOverridesCap) {
  ASSERT_EQ(setenv("PROXIKNAP_ORACLE_CAP", "100", 1), 0);
  EXPECT_EQ(OracleCellCap(), 100);
  const KnapsackInstance instance{{{1, 1, 1}}, 1000};
  EXPECT_THROW(DpKnapsack(instance), ResourceLimitError);
  ASSERT_EQ(unsetenv("PROXIKNAP_ORACLE_CAP"), 0);
  EXPECT_EQ(OracleCellCap(), kDefaultOracleCellCap);
}

TEST(BruteForceKnapsackTest, Examples) {
  EXPECT_EQ(BruteForceKnapsack({{{5, 9, 3}}, 12}).value, 18);
  EXPECT_EQ(BruteForceKnapsack({{}, 12}).value, 0);
}

TEST(BruteForceKnapsackTest, ResourceCap) {
  KnapsackInstance instance;
  instance.capacity = 10;
  for (int i = 0; i < 30; ++i) instance.items.push_back({1, 1, 3});
  EXPECT_THROW(BruteForceKnapsack(instance), ResourceLimitError);
}

TEST(BruteForceKnapsackTest, AgreesWithDp) {
  CounterRng rng(3);
  for (int rep = 0; rep < 10000; ++rep) {
    const KnapsackInstance instance = testing::RandomKnapsack(rng, 5, 8, 9, 3);
    const OptResult dp = DpKnapsack(instance);
    const OptResult brute = BruteForceKnapsack(instance);
    ASSERT_EQ(dp.value, brute.value);
    ASSERT_TRUE(IsFeasibleWitness(instance, dp));
    ASSERT_TRUE(IsFeasibleWitness(instance, brute));
  }
}

TEST(DpSumsUptoTest, Examples) {
  EXPECT_EQ(DpSumsUpto(std::vector<WeightCount>{{3, 1}}, 10).Elements(),
            (std::vector<int64_t>{0, 3}));
  EXPECT_EQ(DpSumsUpto(std::vector<WeightCount>{{2, 2}, {5, 1}}, 9).Elements(),
            (std::vector<int64_t>{0, 2, 4, 5, 7, 9}));
  EXPECT_EQ(DpSumsUpto(std::vector<WeightCount>{}, 4).Elements(),
            (std::vector<int64_t>{0}));
}

TEST(DpSumsUptoTest, MonotoneInCap) {
  CounterRng rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    const SubsetSumInstance instance = testing::RandomSubsetSum(rng, 8, 12, 6);
    const int64_t small = UniformInt(rng, 0, 40);
    const int64_t large = small + UniformInt(rng, 0, 40);
    const AttainableSet a = DpSumsUpto(instance.pairs, small);
    const AttainableSet b = DpSumsUpto(instance.pairs, large);
    for (int64_t s : a.Elements()) EXPECT_TRUE(b.Contains(s));
    for (int64_t s : b.Elements()) {
      if (s <= small) {
        EXPECT_TRUE(a.Contains(s));
      }
    }
  }
}

TEST(MinDistanceOptimalTest, Example) {
  const KnapsackInstance instance{{{2, 3, 1}, {3, 4, 1}}, 3};
  const std::vector<int64_t> g{1, 0};
  const OptResult result = MinDistanceOptimal(instance, g);
  EXPECT_EQ(result.value, 4);
  EXPECT_EQ(result.solution, (std::vector<int64_t>{0, 1}));
  EXPECT_EQ(L1Distance(result.solution, g), 2);
}

TEST(MinDistanceOptimalTest, GreedyOptimalGivesZero) {
  const KnapsackInstance instance{{{2, 5, 2}, {3, 1, 1}}, 4};
  const GreedySolution greedy = GreedyPrefix(instance);
  const OptResult result =
      MinDistanceOptimal(greedy.instance, greedy.counts);
  EXPECT_EQ(result.value, 10);
  EXPECT_EQ(L1Distance(result.solution, greedy.counts), 0);
}

TEST(MinDistanceOptimalTest, MatchesDpAndProximity) {
  CounterRng rng(13);
  for (int rep = 0; rep < 1000; ++rep) {
    const KnapsackInstance raw = testing::RandomKnapsack(rng, 12, 10, 20, 5);
    const KnapsackInstance instance =
        NormalizeKnapsack(raw.items, raw.capacity);
    const GreedySolution greedy = GreedyPrefix(instance);
    const OptResult result =
        MinDistanceOptimal(greedy.instance, greedy.counts);
    ASSERT_EQ(result.value, DpKnapsack(instance).value);
    ASSERT_TRUE(IsFeasibleWitness(greedy.instance, result));
    ASSERT_LE(L1Distance(result.solution, greedy.counts),
              2 * instance.MaxWeight());
  }
}

}  // namespace
}  // namespace proxiknap
