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

#ifndef PROXIKNAP_REDUCTION_H_
#define PROXIKNAP_REDUCTION_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "proxiknap/greedy.h"
#include "proxiknap/model.h"

namespace proxiknap {

// Copies fixed into the solution by a reduction, per pair of the original
// instance.
struct ReductionOffset {
  int64_t fixed_weight = 0;
  int64_t fixed_profit = 0;
  std::vector<int64_t> lower_bounds;
};

// Bounds every multiplicity by 4 * w_max using a maximal prefix solution:
// some optimal solution lies within 2 * w_max copies of `greedy` on every
// pair, so max(g_i - 2 w_max, 0) copies are fixed in (and subtracted from the
// target) and copies beyond g_i + 2 w_max are dropped. `greedy` must come
// from SubsetSumPrefix(instance) or otherwise index instance.pairs through
// its `source` field. Throws InfeasibleReductionError if the fixed copies
// outweigh the target.
std::pair<SubsetSumInstance, ReductionOffset> ClampMultiplicities(
    const SubsetSumInstance& instance, const GreedySolution& greedy);

}  // namespace proxiknap

#endif  // PROXIKNAP_REDUCTION_H_
