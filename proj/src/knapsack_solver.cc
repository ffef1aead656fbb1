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

#include "proxiknap/knapsack_solver.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "proxiknap/errors.h"
#include "proxiknap/oracle.h"
#include "proxiknap/structured_conv.h"

namespace proxiknap {
namespace {

// One convolution of the chain, kept for backtracking.
struct Step {
  int64_t weight = 0;
  std::vector<uint32_t> copies;
};

struct Side {
  ProfitSequence sequence{0};
  std::vector<Step> steps;
};

int64_t SaturatingMul(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return INT64_MAX;
  return out;
}

// Copies of each weight chosen by the chain ending at `index`.
std::vector<std::pair<int64_t, int64_t>> Backtrack(const Side& side,
                                                   size_t index) {
  std::vector<std::pair<int64_t, int64_t>> chosen;
  for (size_t k = side.steps.size(); k-- > 0;) {
    const Step& step = side.steps[k];
    const int64_t c = step.copies[index];
    if (c > 0) chosen.emplace_back(step.weight, c);
    index -= static_cast<size_t>(c * step.weight);
  }
  return chosen;
}

// Spreads `count` copies over `members` in the order the step profile used.
void Distribute(const std::vector<Item>& items, std::vector<size_t> members,
                bool best_first, int64_t count, int sign,
                std::vector<int64_t>& solution) {
  std::stable_sort(members.begin(), members.end(), [&](size_t a, size_t b) {
    return best_first ? items[a].profit > items[b].profit
                      : items[a].profit < items[b].profit;
  });
  for (size_t i : members) {
    if (count == 0) break;
    const int64_t take = std::min(count, items[i].multiplicity);
    solution[i] += sign * take;
    count -= take;
  }
}

}  // namespace

OptResult SolveWithPartition(const GreedySolution& greedy,
                             const WeightPartition& partition, bool witness,
                             int64_t* cells) {
  const std::vector<Item>& items = greedy.instance.items;
  OptResult result;
  if (!greedy.break_index.has_value()) {
    result.value = greedy.SelectedProfit();
    if (witness) result.solution = greedy.counts;
    return result;
  }
  const size_t b = *greedy.break_index;
  const int64_t cap0 = partition.unconditional_cap;

  // Items of each side grouped by weight, in processing order.
  std::vector<std::vector<size_t>> left_members, right_members;
  std::vector<int64_t> order;  // weights in processing order
  for (const WeightClass& weight_class : partition.classes) {
    for (int64_t weight : weight_class.weights) order.push_back(weight);
  }
  {
    // Bucket once instead of scanning per weight.
    std::vector<int64_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    auto slot = [&](int64_t weight) {
      return static_cast<size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), weight) -
          sorted.begin());
    };
    std::vector<std::vector<size_t>> left(sorted.size()), right(sorted.size());
    for (size_t i = 0; i < items.size(); ++i) {
      const size_t s = slot(items[i].weight);
      if (s >= sorted.size() || sorted[s] != items[i].weight) {
        throw PreconditionError("partition does not cover every weight");
      }
      (i < b ? left : right)[s].push_back(i);
    }
    for (int64_t weight : order) {
      left_members.push_back(std::move(left[slot(weight)]));
      right_members.push_back(std::move(right[slot(weight)]));
    }
  }

  Side minus, plus;
  int64_t produced = 0;
  size_t position = 0;
  for (size_t j = 0; j < partition.classes.size(); ++j) {
    const WeightClass& weight_class = partition.classes[j];
    const int64_t limit = std::min(
        SaturatingMul(static_cast<int64_t>(j + 1), weight_class.bound), cap0);
    for (int64_t weight : weight_class.weights) {
      const auto run = [&](Side& side, const std::vector<size_t>& members,
                           StepOrder step_order) {
        if (members.empty()) return;
        std::vector<Item> group;
        group.reserve(members.size());
        for (size_t i : members) group.push_back(items[i]);
        const StepProfile profile =
            BuildStepProfile(group, weight, limit, step_order);
        Step step;
        step.weight = weight;
        side.sequence = ConcaveStepConvolve(side.sequence, profile, limit,
                                            witness ? &step.copies : nullptr);
        produced += static_cast<int64_t>(side.sequence.size());
        if (witness) side.steps.push_back(std::move(step));
      };
      run(minus, left_members[position], StepOrder::kLeastValuableFirstNegated);
      run(plus, right_members[position], StepOrder::kMostValuableFirst);
      ++position;
    }
  }
  if (cells != nullptr) *cells += produced;

  const int64_t base = greedy.SelectedProfit();
  const int64_t slack = greedy.instance.capacity - greedy.SelectedWeight();
  const ProfitSequence best_added = PrefixMaxima(plus.sequence);
  const int64_t last = static_cast<int64_t>(best_added.size()) - 1;
  int64_t best = kNegInf;
  size_t best_removed = 0;
  for (size_t removed = 0; removed < minus.sequence.size(); ++removed) {
    if (minus.sequence[removed] <= kNegInf) continue;
    const int64_t reach =
        std::min(static_cast<int64_t>(removed) + slack, last);
    const int64_t value = SaturatingAdd(
        minus.sequence[removed], best_added[static_cast<size_t>(reach)]);
    if (value > best) {
      best = value;
      best_removed = removed;
    }
  }
  result.value = base + best;
  if (!witness) return result;

  const int64_t reach =
      std::min(static_cast<int64_t>(best_removed) + slack, last);
  size_t best_added_index = 0;
  while (plus.sequence[best_added_index] !=
         best_added[static_cast<size_t>(reach)]) {
    ++best_added_index;
  }
  result.solution = greedy.counts;
  auto find_position = [&](int64_t weight) {
    return static_cast<size_t>(std::find(order.begin(), order.end(), weight) -
                               order.begin());
  };
  for (const auto& [weight, count] : Backtrack(minus, best_removed)) {
    Distribute(items, left_members[find_position(weight)], false, count, -1,
               result.solution);
  }
  for (const auto& [weight, count] : Backtrack(plus, best_added_index)) {
    Distribute(items, right_members[find_position(weight)], true, count, +1,
               result.solution);
  }
  return result;
}

OptResult SolveKnapsack(const KnapsackInstance& instance,
                        const SolverConfig& config, SolveStats* stats) {
  ValidateKnapsack(instance);
  if (!(config.c_a > 0) || !(config.c_b > 0)) {
    throw InvalidInputError("constants c_A and c_B must be positive");
  }
  const std::vector<size_t> order = EfficiencyOrder(instance.items);
  KnapsackInstance sorted;
  sorted.capacity = instance.capacity;
  for (size_t index : order) sorted.items.push_back(instance.items[index]);

  const GreedySolution greedy = ApplyBreakTieOrder(GreedyPrefix(sorted));
  const WeightPartition partition =
      ComputePartition(greedy, {config.scheme, config.c_a, config.c_b});

  SolveStats local;
  OptResult result =
      SolveWithPartition(greedy, partition, config.witness, &local.cells);
  local.first_pass_cells = local.cells;
  local.passes = 1;
  if (config.verified && greedy.break_index.has_value() &&
      !AllBoundsCapped(partition)) {
    const OptResult doubled = SolveWithPartition(
        greedy, DoubleBounds(partition), /*witness=*/false, &local.cells);
    ++local.passes;
    if (doubled.value != result.value) {
      result = SolveWithPartition(greedy, CapAllBounds(partition),
                                  config.witness, &local.cells);
      ++local.passes;
      local.fell_back = true;
    }
  }

  if (config.witness) {
    GreedySolution mapped = greedy;
    mapped.counts = result.solution;
    const std::vector<int64_t> by_sorted = mapped.CountsBySource(order.size());
    result.solution.assign(order.size(), 0);
    for (size_t k = 0; k < order.size(); ++k) {
      result.solution[order[k]] = by_sorted[k];
    }
  } else {
    result.solution.clear();
  }

  if (config.oracle_check) {
    const OptResult reference = DpKnapsack(instance);
    if (reference.value != result.value) {
      throw VerificationError("solver value " + std::to_string(result.value) +
                              " differs from oracle " +
                              std::to_string(reference.value));
    }
  }
  if (stats != nullptr) *stats = local;
  return result;
}

}  // namespace proxiknap
