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

#include "proxiknap/model.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "proxiknap/errors.h"

namespace proxiknap {

namespace {

// Totals are kept well below 2^63 so that sentinel arithmetic in the
// convolution kernels never wraps.
constexpr int64_t kMaxTotal = int64_t{1} << 60;

int64_t CheckedMulAdd(int64_t acc, int64_t a, int64_t b, const char* what) {
  int64_t product = 0;
  int64_t sum = 0;
  if (__builtin_mul_overflow(a, b, &product) ||
      __builtin_add_overflow(acc, product, &sum) || sum > kMaxTotal) {
    throw InvalidInputError(std::string(what) + " overflows 64-bit range");
  }
  return sum;
}

void ValidateItems(const std::vector<Item>& items, int64_t capacity) {
  if (capacity < 0) throw InvalidInputError("capacity must be non-negative");
  int64_t weight_total = 0;
  int64_t profit_total = 0;
  int64_t max_weight = 0;
  int64_t max_profit = 0;
  for (const Item& item : items) {
    if (item.weight < 1) throw InvalidInputError("item weight must be >= 1");
    if (item.multiplicity < 1) {
      throw InvalidInputError("item multiplicity must be >= 1");
    }
    if (item.profit < 0) throw InvalidInputError("item profit must be >= 0");
    weight_total = CheckedMulAdd(weight_total, item.weight, item.multiplicity,
                                 "total weight");
    profit_total = CheckedMulAdd(profit_total, item.profit, item.multiplicity,
                                 "total profit");
    max_weight = std::max(max_weight, item.weight);
    max_profit = std::max(max_profit, item.profit);
  }
  const int64_t n = static_cast<int64_t>(items.size());
  CheckedMulAdd(0, CheckedMulAdd(0, n, max_weight, "n * w_max"), max_profit,
                "n * w_max * p_max");
}

}  // namespace

int64_t KnapsackInstance::MaxWeight() const {
  int64_t w = 0;
  for (const Item& item : items) w = std::max(w, item.weight);
  return w;
}

int64_t KnapsackInstance::TotalWeight() const {
  int64_t total = 0;
  for (const Item& item : items) total += item.weight * item.multiplicity;
  return total;
}

std::vector<int64_t> KnapsackInstance::DistinctWeights() const {
  std::vector<int64_t> weights;
  weights.reserve(items.size());
  for (const Item& item : items) weights.push_back(item.weight);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  return weights;
}

int64_t SubsetSumInstance::MaxWeight() const {
  int64_t w = 0;
  for (const WeightCount& pair : pairs) w = std::max(w, pair.weight);
  return w;
}

int64_t SubsetSumInstance::TotalWeight() const {
  int64_t total = 0;
  for (const WeightCount& pair : pairs) total += pair.weight * pair.multiplicity;
  return total;
}

int CompareEfficiency(const Item& a, const Item& b) {
  const __int128 lhs = static_cast<__int128>(a.profit) * b.weight;
  const __int128 rhs = static_cast<__int128>(b.profit) * a.weight;
  if (lhs > rhs) return 1;
  if (lhs < rhs) return -1;
  return 0;
}

void ValidateKnapsack(const KnapsackInstance& instance) {
  ValidateItems(instance.items, instance.capacity);
}

std::vector<size_t> EfficiencyOrder(const std::vector<Item>& items) {
  std::vector<size_t> order(items.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t lhs, size_t rhs) {
    const int cmp = CompareEfficiency(items[lhs], items[rhs]);
    if (cmp != 0) return cmp > 0;
    return items[lhs].weight < items[rhs].weight;
  });
  return order;
}

KnapsackInstance NormalizeKnapsack(std::vector<Item> raw, int64_t capacity) {
  ValidateItems(raw, capacity);
  const std::vector<size_t> order = EfficiencyOrder(raw);
  KnapsackInstance instance;
  instance.capacity = capacity;
  instance.items.reserve(raw.size());
  for (size_t index : order) instance.items.push_back(raw[index]);
  return instance;
}

SubsetSumInstance NormalizeSubsetSum(const std::vector<WeightCount>& raw,
                                     int64_t target) {
  std::vector<Item> as_items;
  as_items.reserve(raw.size());
  for (const WeightCount& pair : raw) {
    as_items.push_back({pair.weight, pair.weight, pair.multiplicity});
  }
  ValidateItems(as_items, target);
  SubsetSumInstance instance;
  instance.target = target;
  std::unordered_map<int64_t, size_t> position;
  for (const WeightCount& pair : raw) {
    auto [it, inserted] = position.try_emplace(pair.weight,
                                               instance.pairs.size());
    if (inserted) {
      instance.pairs.push_back(pair);
    } else {
      instance.pairs[it->second].multiplicity += pair.multiplicity;
    }
  }
  return instance;
}

KnapsackInstance AsKnapsack(const SubsetSumInstance& instance) {
  KnapsackInstance knapsack;
  knapsack.capacity = instance.target;
  knapsack.items.reserve(instance.pairs.size());
  for (const WeightCount& pair : instance.pairs) {
    knapsack.items.push_back({pair.weight, pair.weight, pair.multiplicity});
  }
  return knapsack;
}

bool IsFeasibleWitness(const KnapsackInstance& instance,
                       const OptResult& result) {
  if (result.solution.size() != instance.items.size()) return false;
  int64_t weight = 0;
  int64_t profit = 0;
  for (size_t i = 0; i < instance.items.size(); ++i) {
    const int64_t x = result.solution[i];
    if (x < 0 || x > instance.items[i].multiplicity) return false;
    weight += x * instance.items[i].weight;
    profit += x * instance.items[i].profit;
  }
  return weight <= instance.capacity && profit == result.value;
}

}  // namespace proxiknap
