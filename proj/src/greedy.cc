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
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "proxiknap/errors.h"

namespace proxiknap {

namespace {

int64_t SaturatingMul(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return INT64_MAX;
  return out;
}

// Rounds a non-negative real threshold up, saturating at `limit`.
int64_t CeilClamped(double value, int64_t limit) {
  const double rounded = std::ceil(value);
  if (!(rounded < static_cast<double>(limit))) return limit;
  return std::max<int64_t>(0, static_cast<int64_t>(rounded));
}

constexpr int64_t kThresholdLimit = int64_t{1} << 40;

void PermuteRange(GreedySolution& greedy, size_t begin, size_t end,
                  bool ascending) {
  const std::vector<Item>& items = greedy.instance.items;
  size_t run_begin = begin;
  while (run_begin < end) {
    size_t run_end = run_begin + 1;
    while (run_end < end &&
           CompareEfficiency(items[run_begin], items[run_end]) == 0) {
      ++run_end;
    }
    if (run_end - run_begin > 1) {
      std::vector<size_t> order(run_end - run_begin);
      std::iota(order.begin(), order.end(), run_begin);
      std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return ascending ? items[a].weight < items[b].weight
                         : items[a].weight > items[b].weight;
      });
      std::vector<Item> new_items;
      std::vector<size_t> new_source;
      std::vector<int64_t> new_counts;
      for (size_t index : order) {
        new_items.push_back(items[index]);
        new_source.push_back(greedy.source[index]);
        new_counts.push_back(greedy.counts[index]);
      }
      for (size_t k = 0; k < order.size(); ++k) {
        greedy.instance.items[run_begin + k] = new_items[k];
        greedy.source[run_begin + k] = new_source[k];
        greedy.counts[run_begin + k] = new_counts[k];
      }
    }
    run_begin = run_end;
  }
}

// Weights of the items in [i*, b) and [b, j*) where each range is grown away
// from b until it spans `threshold` distinct weights.
std::unordered_set<int64_t> ScanDistinct(const std::vector<Item>& items,
                                         size_t break_index,
                                         int64_t threshold) {
  std::unordered_set<int64_t> result;
  std::unordered_set<int64_t> seen;
  for (size_t i = break_index; i-- > 0;) {
    const int64_t w = items[i].weight;
    if (!seen.contains(w)) {
      if (static_cast<int64_t>(seen.size()) == threshold) break;
      seen.insert(w);
    }
  }
  result.insert(seen.begin(), seen.end());
  seen.clear();
  for (size_t j = break_index; j < items.size(); ++j) {
    const int64_t w = items[j].weight;
    if (!seen.contains(w)) {
      if (static_cast<int64_t>(seen.size()) == threshold) break;
      seen.insert(w);
    }
  }
  result.insert(seen.begin(), seen.end());
  return result;
}

// Weights frequent (>= copy_threshold copies) in the ranges grown from b
// through items whose weight lies in `star`, stopping before a range would
// hold more than `threshold` frequent weights.
std::unordered_set<int64_t> ScanFrequent(
    const std::vector<Item>& items, size_t break_index,
    const std::unordered_set<int64_t>& star, int64_t copy_threshold,
    int64_t threshold) {
  std::unordered_set<int64_t> result;
  auto scan = [&](auto begin, auto end, auto step) {
    std::unordered_map<int64_t, int64_t> copies;
    std::unordered_set<int64_t> frequent;
    for (auto i = begin; i != end; i = step(i)) {
      const Item& item = items[i];
      if (!star.contains(item.weight)) continue;
      int64_t& count = copies[item.weight];
      const int64_t updated = count + item.multiplicity;
      const bool becomes_frequent =
          count < copy_threshold && updated >= copy_threshold;
      if (becomes_frequent &&
          static_cast<int64_t>(frequent.size()) == threshold) {
        break;
      }
      count = updated;
      if (becomes_frequent) frequent.insert(item.weight);
    }
    result.insert(frequent.begin(), frequent.end());
  };
  // Left side walks b-1, b-2, ..., 0; the right side walks b, ..., n-1.
  scan(static_cast<std::ptrdiff_t>(break_index) - 1, std::ptrdiff_t{-1},
       [](std::ptrdiff_t i) { return i - 1; });
  scan(static_cast<std::ptrdiff_t>(break_index),
       static_cast<std::ptrdiff_t>(items.size()),
       [](std::ptrdiff_t i) { return i + 1; });
  return result;
}

void AddClass(WeightPartition& partition, std::vector<int64_t> weights,
              double raw_bound) {
  if (weights.empty()) return;
  std::sort(weights.begin(), weights.end());
  WeightClass weight_class;
  weight_class.weights = std::move(weights);
  weight_class.bound = CeilClamped(raw_bound, partition.unconditional_cap);
  weight_class.capped = weight_class.bound >= partition.unconditional_cap;
  partition.classes.push_back(std::move(weight_class));
}

void SortClasses(WeightPartition& partition) {
  std::stable_sort(partition.classes.begin(), partition.classes.end(),
                   [](const WeightClass& a, const WeightClass& b) {
                     if (a.bound != b.bound) return a.bound < b.bound;
                     return a.weights.front() < b.weights.front();
                   });
}

}  // namespace

int64_t GreedySolution::SelectedWeight() const {
  int64_t total = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    total += counts[i] * instance.items[i].weight;
  }
  return total;
}

int64_t GreedySolution::SelectedProfit() const {
  int64_t total = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    total += counts[i] * instance.items[i].profit;
  }
  return total;
}

std::vector<int64_t> GreedySolution::CountsBySource(size_t source_size) const {
  std::vector<int64_t> out(source_size, 0);
  for (size_t i = 0; i < counts.size(); ++i) out[source[i]] += counts[i];
  return out;
}

GreedySolution GreedyPrefix(const KnapsackInstance& instance) {
  GreedySolution greedy;
  greedy.instance.capacity = instance.capacity;
  int64_t remaining = instance.capacity;
  for (size_t i = 0; i < instance.items.size(); ++i) {
    const Item& item = instance.items[i];
    if (greedy.break_index.has_value()) {
      greedy.instance.items.push_back(item);
      greedy.source.push_back(i);
      greedy.counts.push_back(0);
      continue;
    }
    if (item.multiplicity <= remaining / item.weight) {
      remaining -= item.multiplicity * item.weight;
      greedy.instance.items.push_back(item);
      greedy.source.push_back(i);
      greedy.counts.push_back(item.multiplicity);
      continue;
    }
    const int64_t taken = remaining / item.weight;
    remaining -= taken * item.weight;
    if (taken > 0) {
      greedy.instance.items.push_back({item.weight, item.profit, taken});
      greedy.source.push_back(i);
      greedy.counts.push_back(taken);
      greedy.split_applied = true;
    }
    greedy.break_index = greedy.instance.items.size();
    greedy.instance.items.push_back(
        {item.weight, item.profit, item.multiplicity - taken});
    greedy.source.push_back(i);
    greedy.counts.push_back(0);
  }
  return greedy;
}

GreedySolution ApplyBreakTieOrder(const GreedySolution& greedy) {
  GreedySolution out = greedy;
  const size_t n = out.instance.items.size();
  const size_t b = out.break_index.value_or(n);
  PermuteRange(out, 0, b, /*ascending=*/true);
  if (b + 1 < n) PermuteRange(out, b + 1, n, /*ascending=*/false);
  return out;
}

const char* SchemeName(PartitionScheme scheme) {
  switch (scheme) {
    case PartitionScheme::kBaseline:
      return "baseline";
    case PartitionScheme::kTwoWay:
      return "two-way";
    case PartitionScheme::kThreeWay:
      return "three-way";
  }
  return "unknown";
}

int64_t CeilLog2(int64_t w_max) {
  const uint64_t w = static_cast<uint64_t>(std::max<int64_t>(w_max, 2));
  return 64 - std::countl_zero(w - 1);
}

int64_t TwoWayDistinctThreshold(int64_t w_max, double c_a) {
  const double w = static_cast<double>(w_max);
  return CeilClamped(2.0 * c_a * std::sqrt(w) * CeilLog2(w_max),
                     kThresholdLimit);
}

int64_t ThreeWayDistinctThreshold(int64_t w_max, double c_a) {
  const double w = static_cast<double>(w_max);
  return CeilClamped(2.0 * c_a * std::pow(w, 0.6) * CeilLog2(w_max),
                     kThresholdLimit);
}

int64_t FrequentCopyThreshold(int64_t w_max) {
  const double w = static_cast<double>(w_max);
  return CeilClamped(2.0 * std::pow(w, 0.2), kThresholdLimit);
}

int64_t FrequentWeightThreshold(int64_t w_max, double c_a) {
  const double w = static_cast<double>(w_max);
  const double log = static_cast<double>(CeilLog2(w_max));
  return CeilClamped(2.0 * c_a * std::pow(w, 0.4) * log * log,
                     kThresholdLimit);
}

WeightPartition ComputePartition(const GreedySolution& greedy,
                                 const PartitionConfig& config) {
  const KnapsackInstance& instance = greedy.instance;
  const int64_t w_max = instance.MaxWeight();
  const double w = static_cast<double>(w_max);
  WeightPartition partition;
  partition.scheme = config.scheme;
  partition.unconditional_cap = std::min(
      SaturatingMul(2, SaturatingMul(w_max, w_max)), instance.capacity);
  const std::vector<int64_t> all = instance.DistinctWeights();
  if (all.empty()) return partition;
  const size_t b = greedy.break_index.value_or(instance.items.size());

  auto split = [&](const std::vector<int64_t>& weights,
                   const std::unordered_set<int64_t>& inside) {
    std::pair<std::vector<int64_t>, std::vector<int64_t>> parts;
    for (int64_t weight : weights) {
      (inside.contains(weight) ? parts.first : parts.second).push_back(weight);
    }
    return parts;
  };
  const double cap = static_cast<double>(partition.unconditional_cap);

  switch (config.scheme) {
    case PartitionScheme::kBaseline:
      AddClass(partition, all, cap);
      break;
    case PartitionScheme::kTwoWay: {
      const auto star = ScanDistinct(
          instance.items, b, TwoWayDistinctThreshold(w_max, config.c_a));
      auto [in_star, out_star] = split(all, star);
      AddClass(partition, std::move(in_star), cap);
      AddClass(partition, std::move(out_star),
               4.0 * config.c_b * std::pow(w, 1.5));
      break;
    }
    case PartitionScheme::kThreeWay: {
      const auto star = ScanDistinct(
          instance.items, b, ThreeWayDistinctThreshold(w_max, config.c_a));
      const auto plus = ScanFrequent(instance.items, b, star,
                                     FrequentCopyThreshold(w_max),
                                     FrequentWeightThreshold(w_max, config.c_a));
      auto [in_star, out_star] = split(all, star);
      auto [in_plus, star_not_plus] = split(in_star, plus);
      AddClass(partition, std::move(in_plus), cap);
      AddClass(partition, std::move(star_not_plus),
               8.0 * config.c_b * std::pow(w, 1.8));
      AddClass(partition, std::move(out_star),
               4.0 * config.c_b * std::pow(w, 1.4));
      break;
    }
  }
  SortClasses(partition);
  return partition;
}

WeightPartition DoubleBounds(const WeightPartition& partition) {
  WeightPartition out = partition;
  for (WeightClass& weight_class : out.classes) {
    if (weight_class.capped) continue;
    const int64_t doubled =
        SaturatingMul(std::max<int64_t>(weight_class.bound, 1), 2);
    weight_class.bound = std::min(doubled, out.unconditional_cap);
    weight_class.capped = weight_class.bound >= out.unconditional_cap;
  }
  SortClasses(out);
  return out;
}

WeightPartition CapAllBounds(const WeightPartition& partition) {
  WeightPartition out = partition;
  for (WeightClass& weight_class : out.classes) {
    weight_class.bound = out.unconditional_cap;
    weight_class.capped = true;
  }
  SortClasses(out);
  return out;
}

bool AllBoundsCapped(const WeightPartition& partition) {
  return std::all_of(partition.classes.begin(), partition.classes.end(),
                     [](const WeightClass& c) { return c.capped; });
}

DenseGreedySolution DenseGreedy(const SubsetSumInstance& instance,
                                int64_t threshold) {
  std::vector<int64_t> weights;
  for (const WeightCount& pair : instance.pairs) weights.push_back(pair.weight);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  if (threshold < 0 ||
      2 * threshold > static_cast<int64_t>(weights.size())) {
    throw PreconditionError("dense greedy needs 2 * threshold distinct weights");
  }
  DenseGreedySolution out;
  out.reserved_weights.assign(weights.begin(), weights.begin() + threshold);
  out.forced_weights.assign(weights.end() - threshold, weights.end());
  int64_t forced_total = 0;
  for (int64_t w : out.forced_weights) forced_total += w;
  if (forced_total > instance.target) {
    throw PreconditionError("forced copies of the dense greedy exceed target");
  }
  const std::unordered_set<int64_t> forced(out.forced_weights.begin(),
                                           out.forced_weights.end());
  const std::unordered_set<int64_t> reserved(out.reserved_weights.begin(),
                                             out.reserved_weights.end());
  GreedySolution& greedy = out.greedy;
  greedy.instance = AsKnapsack(instance);
  greedy.source.resize(instance.pairs.size());
  std::iota(greedy.source.begin(), greedy.source.end(), size_t{0});
  greedy.counts.assign(instance.pairs.size(), 0);
  int64_t remaining = instance.target - forced_total;
  for (size_t i = 0; i < instance.pairs.size(); ++i) {
    if (forced.contains(instance.pairs[i].weight)) greedy.counts[i] = 1;
  }
  for (size_t i = 0; i < instance.pairs.size(); ++i) {
    const WeightCount& pair = instance.pairs[i];
    const int64_t available = pair.multiplicity - greedy.counts[i] -
                              (reserved.contains(pair.weight) ? 1 : 0);
    const int64_t take = std::min(available, remaining / pair.weight);
    greedy.counts[i] += take;
    remaining -= take * pair.weight;
  }
  return out;
}

GreedySolution SubsetSumPrefix(const SubsetSumInstance& instance) {
  return GreedyPrefix(AsKnapsack(instance));
}

}  // namespace proxiknap
