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

// Bounded Subset Sum: a layered solver running in time roughly n * w_max, a
// proximity-based solver for instances with many distinct weights, and the
// dispatcher choosing between them.

#ifndef PROXIKNAP_SUBSET_SUM_H_
#define PROXIKNAP_SUBSET_SUM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proxiknap/greedy.h"
#include "proxiknap/model.h"
#include "proxiknap/rng.h"
#include "proxiknap/sums_backend.h"
#include "proxiknap/sumset.h"

namespace proxiknap {

// u = sum_i digits[i] * 2^i with 2 <= digits[i] < 4 for every digit but the
// last, and 1 <= last digit < 4.
struct BundleDigits {
  std::vector<int64_t> digits;

  int64_t Value() const;
};

// Throws InvalidInputError for u < 1.
BundleDigits BinaryBundle(int64_t u);

// Counts eta[i] in [0, digits[i]] with sum_i eta[i] * 2^i == eta. Throws
// InvalidInputError if eta is outside [0, digits.Value()].
std::vector<int64_t> DecomposeEta(int64_t eta, const BundleDigits& digits);

// Layer i holds digits_j[i] copies of every weight w_j, so that the subset
// sums of the instance are sum_i 2^i S(layer i).
struct LayeredInstance {
  std::vector<std::vector<WeightCount>> layers;
};

LayeredInstance BuildLayers(const SubsetSumInstance& instance);

// S(layer i) for every layer, each truncated to min(layer total, caps >> i).
std::vector<AttainableSet> LayerSums(const LayeredInstance& layered,
                                     int64_t cap);

// sum_i 2^i S(layer i), truncated to cap: all subset sums <= cap.
AttainableSet LayeredSubsetSums(const SubsetSumInstance& instance,
                                int64_t cap);

// Layered solver. Bounds multiplicities by 4 * w_max around a greedy
// solution, then decides t in sum_i 2^i S(X_i) by k-ary membership.
bool SolveSsNw(const SubsetSumInstance& instance);

// The exchange window around the dense greedy solution.
struct DenseSplit {
  DenseGreedySolution greedy;
  std::vector<WeightCount> minus;  // (w_i, g_i)
  std::vector<WeightCount> plus;   // (w_i, u_i - g_i)
  int64_t t0 = 0;
  int64_t t_prime = 0;
  int64_t threshold = 0;  // number of forced / reserved weights used
};

struct SubsetSumConfig {
  enum class Algo { kAuto, kNw, kDense, kSumsUpto };
  Algo algo = Algo::kAuto;
  double c_a = 1.0;
  double c_b = 1.0;
  SumsBackend backend = SumsBackend::kAuto;
  // Dispatcher thresholds; computed from w_max when unset.
  std::optional<int64_t> dense_target_threshold;  // 2 cA w^3/2 log w
  std::optional<int64_t> dense_width_threshold;   // 4 cA w^1/2 log w
};

const char* AlgoName(SubsetSumConfig::Algo algo);

int64_t DenseTargetThreshold(int64_t w_max, double c_a);
int64_t DenseWidthThreshold(int64_t w_max, double c_a);
// ceil((4 cA + 2 cB) w^3/2 log w).
int64_t DenseWindow(int64_t w_max, double c_a, double c_b);

// Builds the split for target <= total / 2. The number of forced weights is
// the two-way threshold, lowered until it fits both the distinct weights and
// the target.
DenseSplit BuildDenseSplit(const SubsetSumInstance& instance,
                           const SubsetSumConfig& config);

// Decides t in t0 + S(G+, t') - S(G-, t'). A true answer is always correct;
// with the randomized backend a false answer may be wrong.
bool SolveSsDense(const SubsetSumInstance& instance,
                  const SubsetSumConfig& config, CounterRng& rng);

struct SubsetSumStats {
  std::string path;  // which branch answered
};

bool SolveSubsetSum(const SubsetSumInstance& instance,
                    const SubsetSumConfig& config, CounterRng& rng,
                    SubsetSumStats* stats = nullptr);

}  // namespace proxiknap

#endif  // PROXIKNAP_SUBSET_SUM_H_
