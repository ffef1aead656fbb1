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

// Domain types shared by every solver: knapsack items, subset-sum pairs and
// the normalization that puts raw input into canonical form.

#ifndef PROXIKNAP_MODEL_H_
#define PROXIKNAP_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace proxiknap {

struct Item {
  int64_t weight = 1;
  int64_t profit = 0;
  int64_t multiplicity = 1;

  bool operator==(const Item&) const = default;
};

struct KnapsackInstance {
  std::vector<Item> items;
  int64_t capacity = 0;

  bool operator==(const KnapsackInstance&) const = default;

  int64_t MaxWeight() const;
  // Sum of multiplicity * weight over all items.
  int64_t TotalWeight() const;
  // Sorted ascending.
  std::vector<int64_t> DistinctWeights() const;
};

struct WeightCount {
  int64_t weight = 1;
  int64_t multiplicity = 1;

  bool operator==(const WeightCount&) const = default;
};

struct SubsetSumInstance {
  std::vector<WeightCount> pairs;
  int64_t target = 0;

  bool operator==(const SubsetSumInstance&) const = default;

  int64_t MaxWeight() const;
  int64_t TotalWeight() const;
};

// A knapsack answer together with a witness: solution[i] copies of item i.
struct OptResult {
  int64_t value = 0;
  std::vector<int64_t> solution;
};

// Three-way comparison of p_a / w_a against p_b / w_b, done exactly by
// cross-multiplication. Returns >0 when `a` is strictly more efficient.
int CompareEfficiency(const Item& a, const Item& b);

// The validation NormalizeKnapsack performs, without reordering.
void ValidateKnapsack(const KnapsackInstance& instance);

// Indices of `items` by non-increasing efficiency, then weight ascending, then
// index: the order NormalizeKnapsack applies.
std::vector<size_t> EfficiencyOrder(const std::vector<Item>& items);

// Validates the items and capacity and sorts items by non-increasing
// efficiency; equal efficiencies are ordered by weight, then input position.
// Throws InvalidInputError on non-positive weight or multiplicity, negative
// profit or capacity, or when sums of weights/profits overflow 64 bits.
KnapsackInstance NormalizeKnapsack(std::vector<Item> raw, int64_t capacity);

// Merges duplicate weights (first occurrence keeps its position) after the
// same validation as NormalizeKnapsack.
SubsetSumInstance NormalizeSubsetSum(const std::vector<WeightCount>& raw,
                                     int64_t target);

// Subset Sum seen as a knapsack with profit == weight, in pair order.
KnapsackInstance AsKnapsack(const SubsetSumInstance& instance);

// True when `result` respects multiplicities and capacity and its value
// equals the profit of its witness.
bool IsFeasibleWitness(const KnapsackInstance& instance,
                       const OptResult& result);

}  // namespace proxiknap

#endif  // PROXIKNAP_MODEL_H_
