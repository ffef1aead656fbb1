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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cli.h"
#include "proxiknap/greedy.h"
#include "proxiknap/instance_gen.h"
#include "proxiknap/knapsack_solver.h"
#include "proxiknap/model.h"
#include "proxiknap/oracle.h"
#include "proxiknap/rng.h"
#include "proxiknap/smawk.h"
#include "proxiknap/structured_conv.h"
#include "proxiknap/subset_sum.h"
#include "proxiknap/sums_backend.h"
#include "proxiknap/sumset.h"

namespace proxiknap {
namespace {

// Pinned criterion parameters.
constexpr int kKnapsackInstances = 10'000;
constexpr int kSubsetSumInstances = 10'000;
constexpr int kProximityInstances = 1'000;
constexpr int kLayerInstances = 1'000;
constexpr int64_t kEtaLimit = 200;
constexpr int kKernelCases = 1'000;
constexpr int kRandomizedTrials = 1'000;
constexpr int64_t kRandomizedCap = 10'000;
constexpr double kMaxFalseNegativeRate = 0.01;
constexpr double kBaselineSlope = 3.0;
constexpr double kBaselineSlopeTolerance = 0.4;
constexpr double kScalingConstant = 0.1;
constexpr int kScalingSeeds = 3;

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict Fail(const std::string& detail) { return {false, detail}; }

std::vector<Item> RandomItems(CounterRng& rng, int64_t n, int64_t w_max,
                              int64_t p_max, int64_t u_max) {
  std::vector<Item> items;
  for (int64_t i = 0; i < n; ++i) {
    items.push_back({UniformInt(rng, 1, w_max), UniformInt(rng, 0, p_max),
                     UniformInt(rng, 1, u_max)});
  }
  return items;
}

std::vector<WeightCount> RandomPairs(CounterRng& rng, int64_t n, int64_t w_max,
                                     int64_t u_max) {
  std::vector<WeightCount> pairs;
  for (int64_t i = 0; i < n; ++i) {
    pairs.push_back({UniformInt(rng, 1, w_max), UniformInt(rng, 1, u_max)});
  }
  return pairs;
}

int64_t TotalWeight(const std::vector<WeightCount>& pairs) {
  int64_t total = 0;
  for (const WeightCount& p : pairs) total += p.weight * p.multiplicity;
  return total;
}

Verdict KnapsackOracleEquivalence() {
  CounterRng rng(1001);
  const PartitionScheme schemes[] = {PartitionScheme::kBaseline,
                                     PartitionScheme::kTwoWay,
                                     PartitionScheme::kThreeWay};
  int64_t solves = 0;
  for (int rep = 0; rep < kKnapsackInstances; ++rep) {
    KnapsackInstance instance;
    instance.items = RandomItems(rng, UniformInt(rng, 1, 40),
                                 UniformInt(rng, 1, 25), 50, 10);
    const int64_t rho_tenths = UniformInt(rng, 1, 9);
    instance.capacity = instance.TotalWeight() * rho_tenths / 10;
    const int64_t expected = DpKnapsack(instance).value;
    for (PartitionScheme scheme : schemes) {
      SolverConfig config;
      config.scheme = scheme;
      const OptResult result = SolveKnapsack(instance, config);
      ++solves;
      if (result.value != expected || !IsFeasibleWitness(instance, result)) {
        return Fail("instance " + std::to_string(rep) + " scheme " +
                    SchemeName(scheme) + ": " + std::to_string(result.value) +
                    " vs " + std::to_string(expected));
      }
    }
  }
  return {true, std::to_string(solves) + " solves match"};
}

Verdict SubsetSumOracleEquivalence() {
  CounterRng rng(1002);
  SubsetSumConfig nw, dense, automatic;
  nw.algo = SubsetSumConfig::Algo::kNw;
  dense.algo = SubsetSumConfig::Algo::kDense;
  dense.backend = SumsBackend::kExact;
  int64_t queries = 0;
  for (int rep = 0; rep < kSubsetSumInstances; ++rep) {
    // Per-instance maxima drawn inside the stated bounds keep the number of
    // targets per instance moderate.
    SubsetSumInstance instance;
    instance.pairs = RandomPairs(rng, UniformInt(rng, 1, 15),
                                 UniformInt(rng, 1, 20), UniformInt(rng, 1, 50));
    const int64_t total = TotalWeight(instance.pairs);
    const AttainableSet truth = DpSumsUpto(instance.pairs, total);
    for (int64_t t = 0; t <= total; ++t) {
      instance.target = t;
      const bool expected = truth.Contains(t);
      CounterRng solver_rng(static_cast<uint64_t>(rep), static_cast<uint64_t>(t));
      const bool got_nw = SolveSubsetSum(instance, nw, solver_rng);
      const bool got_dense = SolveSubsetSum(instance, dense, solver_rng);
      const bool got_auto = SolveSubsetSum(instance, automatic, solver_rng);
      queries += 3;
      if (got_nw != expected || got_dense != expected || got_auto != expected) {
        return Fail("instance " + std::to_string(rep) + " target " +
                    std::to_string(t));
      }
    }
  }
  return {true, std::to_string(queries) + " queries match"};
}

Verdict Proximity() {
  CounterRng rng(1003);
  int64_t worst = 0;
  for (int rep = 0; rep < kProximityInstances; ++rep) {
    const std::vector<Item> raw =
        RandomItems(rng, UniformInt(rng, 1, 12), UniformInt(rng, 1, 10), 30, 6);
    int64_t total = 0;
    for (const Item& item : raw) total += item.weight * item.multiplicity;
    const KnapsackInstance instance =
        NormalizeKnapsack(raw, UniformInt(rng, 0, total));
    const GreedySolution greedy = GreedyPrefix(instance);
    const OptResult z = MinDistanceOptimal(greedy.instance, greedy.counts);
    const int64_t distance = L1Distance(z.solution, greedy.counts);
    const int64_t w_max = std::max<int64_t>(instance.MaxWeight(), 1);
    if (z.value != DpKnapsack(instance).value) {
      return Fail("instance " + std::to_string(rep) + " not optimal");
    }
    if (distance > 2 * w_max) {
      return Fail("instance " + std::to_string(rep) + " distance " +
                  std::to_string(distance));
    }
    worst = std::max<int64_t>(worst, distance);
  }
  return {true, "max distance " + std::to_string(worst)};
}

Verdict LayeredIdentity() {
  CounterRng rng(1004);
  for (int rep = 0; rep < kLayerInstances; ++rep) {
    // Distinct weights by construction.
    std::vector<int64_t> weights(20);
    for (int64_t i = 0; i < 20; ++i) weights[i] = i + 1;
    const int64_t distinct = UniformInt(rng, 1, 12);
    SubsetSumInstance instance;
    for (int64_t i = 0; i < distinct; ++i) {
      const int64_t pick = UniformInt(rng, i, 19);
      std::swap(weights[i], weights[pick]);
      instance.pairs.push_back({weights[i], UniformInt(rng, 1, 100)});
    }
    const int64_t total = TotalWeight(instance.pairs);
    if (!(LayeredSubsetSums(instance, total) ==
          DpSumsUpto(instance.pairs, total))) {
      return Fail("multiset " + std::to_string(rep));
    }
  }
  return {true, std::to_string(kLayerInstances) + " multisets identical"};
}

Verdict EtaDecomposition() {
  int64_t checked = 0;
  for (int64_t u = 1; u <= kEtaLimit; ++u) {
    const BundleDigits digits = BinaryBundle(u);
    if (digits.Value() != u) return Fail("bundle of " + std::to_string(u));
    for (int64_t eta = 0; eta <= u; ++eta) {
      const std::vector<int64_t> counts = DecomposeEta(eta, digits);
      int64_t sum = 0;
      for (size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0 ||
            (i < digits.digits.size() ? counts[i] > digits.digits[i]
                                      : counts[i] != 0)) {
          return Fail("u=" + std::to_string(u) + " eta=" + std::to_string(eta));
        }
        sum += counts[i] << i;
      }
      if (sum != eta) {
        return Fail("u=" + std::to_string(u) + " eta=" + std::to_string(eta));
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " decompositions valid"};
}

AttainableSet RandomSet(CounterRng& rng, int64_t max_value, int64_t count) {
  std::vector<int64_t> elements{0};
  for (int64_t i = 0; i < count; ++i) {
    elements.push_back(UniformInt(rng, 0, max_value));
  }
  return AttainableSet::FromElements(elements, max_value);
}

std::set<int64_t> BruteSumset(const std::set<int64_t>& a,
                              const AttainableSet& b, int64_t scale,
                              int64_t cap) {
  std::set<int64_t> out;
  for (int64_t x : a) {
    for (int64_t y : b.Elements()) {
      if (x + scale * y <= cap) out.insert(x + scale * y);
    }
  }
  return out;
}

Verdict Kernels() {
  CounterRng rng(1006);
  int64_t cases = 0;
  // Row maxima of Monge matrices x[j] + f(i - j), f concave.
  for (int rep = 0; rep < kKernelCases; ++rep, ++cases) {
    const size_t rows = static_cast<size_t>(UniformInt(rng, 1, 40));
    const size_t cols = static_cast<size_t>(UniformInt(rng, 1, 40));
    std::vector<int64_t> x(cols);
    for (auto& v : x) v = UniformInt(rng, -8, 8);
    const int64_t span = static_cast<int64_t>(rows + cols);
    std::vector<int64_t> f(static_cast<size_t>(2 * span + 1));
    int64_t slope = UniformInt(rng, 0, 5);
    for (size_t k = 1; k < f.size(); ++k) {
      if (UniformInt(rng, 0, 2) == 0) --slope;
      f[k] = f[k - 1] + slope;
    }
    auto entry = [&](size_t i, size_t j) {
      return x[j] + f[static_cast<size_t>(static_cast<int64_t>(i) -
                                          static_cast<int64_t>(j) + span)];
    };
    const std::vector<size_t> argmax = SmawkRowMaxima(rows, cols, entry);
    for (size_t i = 0; i < rows; ++i) {
      size_t best = 0;
      for (size_t j = 1; j < cols; ++j) {
        if (entry(i, j) > entry(i, best)) best = j;
      }
      if (argmax[i] != best) return Fail("smawk case " + std::to_string(rep));
    }
  }
  for (int rep = 0; rep < kKernelCases; ++rep, ++cases) {
    ProfitSequence x(static_cast<size_t>(UniformInt(rng, 1, 60)));
    for (auto& v : x) {
      v = UniformInt(rng, 0, 3) == 0 ? kNegInf : UniformInt(rng, -40, 80);
    }
    const int64_t w = UniformInt(rng, 1, 9);
    std::vector<Item> group;
    for (int64_t k = UniformInt(rng, 0, 5); k > 0; --k) {
      group.push_back({w, UniformInt(rng, 0, 30), UniformInt(rng, 1, 5)});
    }
    const int64_t cap = UniformInt(rng, 0, 120);
    const StepOrder order = UniformInt(rng, 0, 1) == 0
                                ? StepOrder::kMostValuableFirst
                                : StepOrder::kLeastValuableFirstNegated;
    const StepProfile profile = BuildStepProfile(group, w, cap, order);
    if (ConcaveStepConvolve(x, profile, cap) !=
        BruteForceMaxPlus(x, profile.Dense(), cap)) {
      return Fail("convolution case " + std::to_string(rep));
    }
  }
  for (int rep = 0; rep < kKernelCases; ++rep, ++cases) {
    // Large spans with many elements exercise the transform path.
    const int64_t range = UniformInt(rng, 0, 1) == 0 ? 60 : 6000;
    const AttainableSet a = RandomSet(rng, range, UniformInt(rng, 0, 100));
    const AttainableSet b = RandomSet(rng, range, UniformInt(rng, 0, 100));
    const int64_t cap = UniformInt(rng, 0, 2 * range);
    const std::vector<int64_t> a_elements = a.Elements();
    const std::set<int64_t> left(a_elements.begin(), a_elements.end());
    const std::set<int64_t> want = BruteSumset(left, b, 1, cap);
    const std::vector<int64_t> got = PairwiseSumset(a, b, cap).Elements();
    if (std::set<int64_t>(got.begin(), got.end()) != want) {
      return Fail("pairwise case " + std::to_string(rep));
    }
  }
  for (int rep = 0; rep < kKernelCases; ++rep, ++cases) {
    std::vector<AttainableSet> sets;
    for (int64_t i = UniformInt(rng, 1, 6); i > 0; --i) {
      sets.push_back(RandomSet(rng, 40, UniformInt(rng, 0, 6)));
    }
    const int64_t cap = UniformInt(rng, 0, 200);
    std::set<int64_t> want{0};
    for (const AttainableSet& s : sets) want = BruteSumset(want, s, 1, cap);
    const std::vector<int64_t> got = MultiSumset(sets, cap).Elements();
    if (std::set<int64_t>(got.begin(), got.end()) != want) {
      return Fail("multi case " + std::to_string(rep));
    }
  }
  for (int rep = 0; rep < kKernelCases; ++rep, ++cases) {
    const int64_t k = std::vector<int64_t>{2, 3, 4}[UniformInt(rng, 0, 2)];
    std::vector<AttainableSet> sets;
    for (int64_t i = UniformInt(rng, 1, 4); i > 0; --i) {
      sets.push_back(RandomSet(rng, 25, UniformInt(rng, 0, 5)));
    }
    std::set<int64_t> reachable{0};
    int64_t scale = 1;
    for (const AttainableSet& s : sets) {
      reachable = BruteSumset(reachable, s, scale, INT64_MAX / 4);
      scale *= k;
    }
    for (int64_t t = 0; t <= *reachable.rbegin() + 2; ++t) {
      if (KaryMembership(sets, k, t) != reachable.contains(t)) {
        return Fail("kary case " + std::to_string(rep));
      }
    }
  }
  return {true, std::to_string(cases) + " kernel cases match"};
}

Verdict RandomizedSoundness() {
  CounterRng rng(1007);
  int positives = 0, false_negatives = 0, missed_sets = 0;
  for (int trial = 0; trial < kRandomizedTrials; ++trial) {
    const std::vector<WeightCount> pairs = RandomPairs(
        rng, UniformInt(rng, 1, 12), UniformInt(rng, 1, 800),
        UniformInt(rng, 1, 20));
    const int64_t cap = UniformInt(rng, 0, kRandomizedCap);
    const AttainableSet truth = DpSumsUpto(pairs, cap);
    const AttainableSet got =
        BoundedSumsUpto(pairs, cap, rng, SumsBackend::kRandomized);
    for (int64_t s : got.Elements()) {
      if (!truth.Contains(s)) {
        return Fail("trial " + std::to_string(trial) + " reports " +
                    std::to_string(s));
      }
    }
    if (!(got == truth)) ++missed_sets;
    // Query an attainable target half the time.
    const std::vector<int64_t> elements = truth.Elements();
    const int64_t target =
        UniformInt(rng, 0, 1) == 0
            ? elements[static_cast<size_t>(UniformInt(
                  rng, 0, static_cast<int64_t>(elements.size()) - 1))]
            : UniformInt(rng, 0, cap);
    if (truth.Contains(target)) {
      ++positives;
      if (!got.Contains(target)) ++false_negatives;
    }
  }
  const double rate =
      positives == 0 ? 0.0 : static_cast<double>(false_negatives) / positives;
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "false negatives %d/%d (rate %.4f), incomplete sets %d/%d",
                false_negatives, positives, rate, missed_sets,
                kRandomizedTrials);
  return {rate <= kMaxFalseNegativeRate, buffer};
}

Verdict ScalingTrend() {
  const std::vector<int64_t> sizes = {64, 128, 256, 512};
  std::vector<double> x, baseline, three_way;
  for (int64_t size : sizes) {
    double base_sum = 0, three_sum = 0;
    for (int seed = 0; seed < kScalingSeeds; ++seed) {
      GeneratorSpec spec;
      spec.family = Family::kWmaxEqN;
      spec.n = size;
      spec.w_max = size;
      spec.p_max = 4 * size;
      spec.u_max = 4;
      spec.seed = static_cast<uint64_t>(seed);
      const KnapsackInstance instance = Generate(spec).knapsack;
      for (PartitionScheme scheme :
           {PartitionScheme::kBaseline, PartitionScheme::kThreeWay}) {
        SolverConfig config;
        config.scheme = scheme;
        config.c_a = kScalingConstant;
        config.c_b = kScalingConstant;
        config.verified = false;
        config.witness = false;
        SolveStats stats;
        SolveKnapsack(instance, config, &stats);
        (scheme == PartitionScheme::kBaseline ? base_sum : three_sum) +=
            static_cast<double>(stats.first_pass_cells);
      }
    }
    x.push_back(static_cast<double>(size));
    baseline.push_back(base_sum / kScalingSeeds);
    three_way.push_back(three_sum / kScalingSeeds);
  }
  const double base_slope = cli::LogLogSlope(x, baseline);
  const double three_slope = cli::LogLogSlope(x, three_way);
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "baseline slope %.3f, three-way slope %.3f (reported), cells "
                "at 512: baseline %.0f three-way %.0f",
                base_slope, three_slope, baseline.back(), three_way.back());
  const bool pass =
      std::abs(base_slope - kBaselineSlope) <= kBaselineSlopeTolerance &&
      three_way.back() < baseline.back();
  return {pass, buffer};
}

}  // namespace
}  // namespace proxiknap

int main() {
  using proxiknap::Verdict;
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"knapsack oracle equivalence", proxiknap::KnapsackOracleEquivalence},
      {"subset sum oracle equivalence", proxiknap::SubsetSumOracleEquivalence},
      {"proximity", proxiknap::Proximity},
      {"layered sumset identity", proxiknap::LayeredIdentity},
      {"eta decomposition", proxiknap::EtaDecomposition},
      {"kernel oracles", proxiknap::Kernels},
      {"randomized backend soundness", proxiknap::RandomizedSoundness},
      {"scaling trend", proxiknap::ScalingTrend},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    try {
      verdict = run();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    std::printf("%s %d %s: %s [%.1fs]\n", verdict.pass ? "PASS" : "FAIL",
                index, name, verdict.detail.c_str(), seconds);
    std::fflush(stdout);
    all = all && verdict.pass;
  }
  return all ? 0 : 1;
}
