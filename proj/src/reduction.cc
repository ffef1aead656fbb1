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

#include "proxiknap/reduction.h"

#include <algorithm>

#include "proxiknap/errors.h"

namespace proxiknap {

std::pair<SubsetSumInstance, ReductionOffset> ClampMultiplicities(
    const SubsetSumInstance& instance, const GreedySolution& greedy) {
  const int64_t slack = 2 * instance.MaxWeight();
  const std::vector<int64_t> selected =
      greedy.CountsBySource(instance.pairs.size());
  SubsetSumInstance reduced;
  ReductionOffset offset;
  offset.lower_bounds.assign(instance.pairs.size(), 0);
  reduced.pairs.reserve(instance.pairs.size());
  for (size_t i = 0; i < instance.pairs.size(); ++i) {
    const WeightCount& pair = instance.pairs[i];
    const int64_t lower = std::max<int64_t>(selected[i] - slack, 0);
    const int64_t upper = std::min(pair.multiplicity, selected[i] + slack);
    offset.lower_bounds[i] = lower;
    offset.fixed_weight += lower * pair.weight;
    reduced.pairs.push_back({pair.weight, upper - lower});
  }
  offset.fixed_profit = offset.fixed_weight;
  if (offset.fixed_weight > instance.target) {
    throw InfeasibleReductionError("fixed copies exceed the target");
  }
  reduced.target = instance.target - offset.fixed_weight;
  return {std::move(reduced), std::move(offset)};
}

}  // namespace proxiknap
