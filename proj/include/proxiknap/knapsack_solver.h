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

// Bounded Knapsack via proximity to the greedy solution: the optimum differs
// from the maximal prefix solution by a small exchange, found by chaining
// truncated step-concave (max,+)-convolutions over weight classes.

#ifndef PROXIKNAP_KNAPSACK_SOLVER_H_
#define PROXIKNAP_KNAPSACK_SOLVER_H_

#include <cstdint>

#include "proxiknap/greedy.h"
#include "proxiknap/model.h"

namespace proxiknap {

struct SolverConfig {
  PartitionScheme scheme = PartitionScheme::kThreeWay;
  double c_a = 1.0;
  double c_b = 1.0;
  // Re-solve with doubled class bounds and fall back to the unconditional
  // bounds when the answer moves.
  bool verified = true;
  // Compare against DpKnapsack and throw VerificationError on mismatch.
  bool oracle_check = false;
  // Reconstruct a solution vector (costs one counter per convolution cell).
  bool witness = true;
};

struct SolveStats {
  int64_t cells = 0;             // convolution cells over all passes
  int64_t first_pass_cells = 0;  // cells of the pass with computed bounds
  int passes = 0;
  bool fell_back = false;        // the doubled pass disagreed
};

// Runs the convolution chain for one partition. `greedy` must carry a
// maximal prefix solution of its instance with g_b = 0, tie-ordered, and
// `partition` must cover its distinct weights. The solution is indexed like
// greedy.instance.items and left empty when `witness` is false. Adds the
// number of convolution cells produced to *cells when non-null.
OptResult SolveWithPartition(const GreedySolution& greedy,
                             const WeightPartition& partition, bool witness,
                             int64_t* cells = nullptr);

// Full pipeline on any valid instance; the solution is indexed like
// instance.items. Throws InvalidInputError on invalid input.
OptResult SolveKnapsack(const KnapsackInstance& instance,
                        const SolverConfig& config,
                        SolveStats* stats = nullptr);

}  // namespace proxiknap

#endif  // PROXIKNAP_KNAPSACK_SOLVER_H_
