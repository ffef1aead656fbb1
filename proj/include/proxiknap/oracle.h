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

// Reference solvers. These are deliberately simple dynamic programs and
// enumerations used as ground truth for the fast solvers.

#ifndef PROXIKNAP_ORACLE_H_
#define PROXIKNAP_ORACLE_H_

#include <cstdint>
#include <span>

#include "proxiknap/model.h"
#include "proxiknap/sumset.h"

namespace proxiknap {

inline constexpr int64_t kDefaultOracleCellCap = 10'000'000;

// The cell budget for the oracles: PROXIKNAP_ORACLE_CAP if set to a positive
// integer, kDefaultOracleCellCap otherwise.
int64_t OracleCellCap();

// Bellman's capacity DP over binary-split items with parent bits for the
// witness. Throws ResourceLimitError if pieces * (t + 1) exceeds the budget.
OptResult DpKnapsack(const KnapsackInstance& instance);

// Full enumeration of all count vectors. Throws ResourceLimitError when
// prod(u_i + 1) exceeds the budget.
OptResult BruteForceKnapsack(const KnapsackInstance& instance);

// All sums <= cap of bounded multisets of the pairs, by shift-or over
// binary-split multiplicities.
AttainableSet DpSumsUpto(std::span<const WeightCount> pairs, int64_t cap);

// An optimal solution minimizing sum_i |z_i - reference_i| among all optimal
// solutions. `reference` is indexed like instance.items. Throws
// ResourceLimitError if sum_i (u_i + 1) * (t + 1) exceeds the budget.
OptResult MinDistanceOptimal(const KnapsackInstance& instance,
                             std::span<const int64_t> reference);

// sum_i |a_i - b_i|.
int64_t L1Distance(std::span<const int64_t> a, std::span<const int64_t> b);

}  // namespace proxiknap

#endif  // PROXIKNAP_ORACLE_H_
