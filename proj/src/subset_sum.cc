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

#include "proxiknap/subset_sum.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "proxiknap/errors.h"
#include "proxiknap/reduction.h"

namespace proxiknap {
namespace {

int64_t CeilThreshold(double value) {
  constexpr double kLimit = static_cast<double>(int64_t{1} << 40);
  const double rounded = std::ceil(value);
  if (!(rounded < kLimit)) return int64_t{1} << 40;
  return std::max<int64_t>(0, static_cast<int64_t>(rounded));
}

// Merged copy of the instance with the target reflected into [0, total / 2].
// Returns false in `feasible` when the target is out of range.
SubsetSumInstance Canonical(const SubsetSumInstance& instance, bool* feasible) {
  SubsetSumInstance merged =
      NormalizeSubsetSum(instance.pairs, std::max<int64_t>(instance.target, 0));
  const int64_t total = merged.TotalWeight();
  *feasible = instance.target >= 0 && instance.target <= total;
  if (*feasible && 2 * merged.target > total) {
    merged.target = total - merged.target;
  }
  return merged;
}

}  // namespace

int64_t BundleDigits::Value() const {
  int64_t value = 0;
  for (size_t i = digits.size(); i-- > 0;) value = value * 2 + digits[i];
  return value;
}

BundleDigits BinaryBundle(int64_t u) {
  if (u < 1) throw InvalidInputError("BinaryBundle: multiplicity must be >= 1");
  BundleDigits out;
  while (u >= 4) {
    const int64_t digit = 2 + u % 2;
    out.digits.push_back(digit);
    u = (u - digit) / 2;
  }
  out.digits.push_back(u);
  return out;
}

std::vector<int64_t> DecomposeEta(int64_t eta, const BundleDigits& digits) {
  if (digits.digits.empty() || eta < 0 || eta > digits.Value()) {
    throw InvalidInputError("DecomposeEta: eta out of range");
  }
  std::vector<int64_t> out(digits.digits.size(), 0);
  for (size_t i = 0; i + 1 < digits.digits.size(); ++i) {
    const int64_t r = eta % 2;
    // Prefer r + 2 so the remaining value stays within the higher digits.
    const int64_t e = (r <= digits.digits[i] - 2 && eta >= r + 2) ? r + 2 : r;
    out[i] = e;
    eta = (eta - e) / 2;
  }
  out.back() = eta;
  if (eta > digits.digits.back()) {
    throw InvalidInputError("DecomposeEta: no decomposition found");
  }
  return out;
}

LayeredInstance BuildLayers(const SubsetSumInstance& instance) {
  LayeredInstance layered;
  for (const WeightCount& pair : instance.pairs) {
    if (pair.multiplicity < 1) continue;
    const BundleDigits bundle = BinaryBundle(pair.multiplicity);
    if (layered.layers.size() < bundle.digits.size()) {
      layered.layers.resize(bundle.digits.size());
    }
    for (size_t i = 0; i < bundle.digits.size(); ++i) {
      if (bundle.digits[i] > 0) {
        layered.layers[i].push_back({pair.weight, bundle.digits[i]});
      }
    }
  }
  return layered;
}

std::vector<AttainableSet> LayerSums(const LayeredInstance& layered,
                                     int64_t cap) {
  std::vector<AttainableSet> sums;
  sums.reserve(layered.layers.size());
  for (size_t i = 0; i < layered.layers.size(); ++i) {
    int64_t total = 0;
    std::vector<AttainableSet> singletons;
    for (const WeightCount& pair : layered.layers[i]) {
      total += pair.weight * pair.multiplicity;
      const int64_t element = pair.weight;
      for (int64_t c = 0; c < pair.multiplicity; ++c) {
        singletons.push_back(AttainableSet::FromElements({&element, 1}, element));
      }
    }
    const int64_t layer_cap = i < 63 ? std::min(total, cap >> i) : 0;
    sums.push_back(MultiSumset(singletons, layer_cap));
  }
  return sums;
}

AttainableSet LayeredSubsetSums(const SubsetSumInstance& instance,
                                int64_t cap) {
  const std::vector<AttainableSet> sums =
      LayerSums(BuildLayers(instance), cap);
  std::vector<AttainableSet> scaled;
  scaled.reserve(sums.size());
  for (size_t i = 0; i < sums.size(); ++i) {
    scaled.push_back(Scale(sums[i], int64_t{1} << i, cap));
  }
  return MultiSumset(scaled, cap);
}

bool SolveSsNw(const SubsetSumInstance& instance) {
  const SubsetSumInstance merged =
      NormalizeSubsetSum(instance.pairs, std::max<int64_t>(instance.target, 0));
  if (instance.target < 0 || instance.target > merged.TotalWeight()) {
    return false;
  }
  if (merged.target == 0) return true;
  SubsetSumInstance reduced;
  try {
    reduced = ClampMultiplicities(merged, SubsetSumPrefix(merged)).first;
  } catch (const InfeasibleReductionError&) {
    return false;
  }
  if (reduced.target == 0) return true;
  const std::vector<AttainableSet> sums =
      LayerSums(BuildLayers(reduced), reduced.target);
  return KaryMembership(sums, 2, reduced.target);
}

const char* AlgoName(SubsetSumConfig::Algo algo) {
  switch (algo) {
    case SubsetSumConfig::Algo::kAuto:
      return "ss-auto";
    case SubsetSumConfig::Algo::kNw:
      return "ss-nw";
    case SubsetSumConfig::Algo::kDense:
      return "ss-dense";
    case SubsetSumConfig::Algo::kSumsUpto:
      return "sums-upto";
  }
  return "unknown";
}

int64_t DenseTargetThreshold(int64_t w_max, double c_a) {
  const double w = static_cast<double>(w_max);
  return CeilThreshold(2.0 * c_a * std::pow(w, 1.5) *
                       static_cast<double>(CeilLog2(w_max)));
}

int64_t DenseWidthThreshold(int64_t w_max, double c_a) {
  const double w = static_cast<double>(w_max);
  return CeilThreshold(4.0 * c_a * std::sqrt(w) *
                       static_cast<double>(CeilLog2(w_max)));
}

int64_t DenseWindow(int64_t w_max, double c_a, double c_b) {
  const double w = static_cast<double>(w_max);
  return CeilThreshold((4.0 * c_a + 2.0 * c_b) * std::pow(w, 1.5) *
                       static_cast<double>(CeilLog2(w_max)));
}

DenseSplit BuildDenseSplit(const SubsetSumInstance& instance,
                           const SubsetSumConfig& config) {
  const int64_t w_max = instance.MaxWeight();
  const int64_t total = instance.TotalWeight();
  std::vector<int64_t> weights;
  for (const WeightCount& pair : instance.pairs) weights.push_back(pair.weight);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

  int64_t threshold =
      std::min<int64_t>(TwoWayDistinctThreshold(w_max, config.c_a),
                        static_cast<int64_t>(weights.size()) / 2);
  auto forced_weight = [&](int64_t count) {
    int64_t sum = 0;
    for (int64_t k = 0; k < count; ++k) {
      sum += weights[weights.size() - 1 - static_cast<size_t>(k)];
    }
    return sum;
  };
  while (threshold > 0 && forced_weight(threshold) > instance.target) {
    --threshold;
  }

  DenseSplit split;
  split.threshold = threshold;
  split.greedy = DenseGreedy(instance, threshold);
  const GreedySolution& g = split.greedy.greedy;
  split.t0 = g.SelectedWeight();
  for (size_t i = 0; i < instance.pairs.size(); ++i) {
    const WeightCount& pair = instance.pairs[i];
    if (g.counts[i] > 0) split.minus.push_back({pair.weight, g.counts[i]});
    if (pair.multiplicity > g.counts[i]) {
      split.plus.push_back({pair.weight, pair.multiplicity - g.counts[i]});
    }
  }
  split.t_prime = std::min(DenseWindow(w_max, config.c_a, config.c_b),
                           std::max(split.t0, total - split.t0));
  return split;
}

bool SolveSsDense(const SubsetSumInstance& instance,
                  const SubsetSumConfig& config, CounterRng& rng) {
  bool feasible = false;
  const SubsetSumInstance canonical = Canonical(instance, &feasible);
  if (!feasible) return false;
  if (canonical.target == 0) return true;
  const DenseSplit split = BuildDenseSplit(canonical, config);
  const int64_t gap = canonical.target - split.t0;
  if (gap == 0) return true;
  if (gap > split.t_prime) return false;
  CounterRng minus_rng = rng.Split(1);
  CounterRng plus_rng = rng.Split(2);
  const AttainableSet removed =
      BoundedSumsUpto(split.minus, split.t_prime, minus_rng, config.backend);
  const AttainableSet added =
      BoundedSumsUpto(split.plus, split.t_prime, plus_rng, config.backend);
  return removed.bits().IntersectsShiftedDown(added.bits(),
                                              static_cast<size_t>(gap));
}

bool SolveSubsetSum(const SubsetSumInstance& instance,
                    const SubsetSumConfig& config, CounterRng& rng,
                    SubsetSumStats* stats) {
  auto report = [&](const char* path, bool answer) {
    if (stats != nullptr) stats->path = path;
    return answer;
  };
  switch (config.algo) {
    case SubsetSumConfig::Algo::kNw:
      return report("ss-nw", SolveSsNw(instance));
    case SubsetSumConfig::Algo::kDense:
      return report("ss-dense", SolveSsDense(instance, config, rng));
    case SubsetSumConfig::Algo::kSumsUpto:
    case SubsetSumConfig::Algo::kAuto:
      break;
  }
  bool feasible = false;
  const SubsetSumInstance canonical = Canonical(instance, &feasible);
  if (!feasible) return report("out-of-range", false);
  if (canonical.target == 0) return report("trivial", true);
  const int64_t w_max = canonical.MaxWeight();
  const int64_t target_threshold = config.dense_target_threshold.value_or(
      DenseTargetThreshold(w_max, config.c_a));
  const int64_t width_threshold = config.dense_width_threshold.value_or(
      DenseWidthThreshold(w_max, config.c_a));
  if (config.algo == SubsetSumConfig::Algo::kSumsUpto ||
      canonical.target < target_threshold) {
    const AttainableSet sums = BoundedSumsUpto(
        canonical.pairs, canonical.target, rng, config.backend);
    return report("sums-upto", sums.Contains(canonical.target));
  }
  if (static_cast<int64_t>(canonical.pairs.size()) < width_threshold) {
    return report("ss-nw", SolveSsNw(canonical));
  }
  return report("ss-dense", SolveSsDense(canonical, config, rng));
}

}  // namespace proxiknap
