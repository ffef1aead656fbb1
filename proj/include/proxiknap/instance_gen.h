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

// Reproducible random instance families.

#ifndef PROXIKNAP_INSTANCE_GEN_H_
#define PROXIKNAP_INSTANCE_GEN_H_

#include <cstdint>
#include <string>

#include "proxiknap/model.h"

namespace proxiknap {

enum class ProblemKind { kKnapsack, kSubsetSum };

enum class Family {
  kUniform,            // independent uniform weights, profits, multiplicities
  kWmaxEqN,            // w_max = n and t = n^2
  kDeltaAdversarial,   // two nearly equal efficiency bands around the break
  kDenseWeights,       // every weight 1..w_max present
  kSparseWeights,      // few distinct weights
};

const char* FamilyName(Family family);
// Throws InvalidInputError for unknown names.
Family ParseFamily(const std::string& name);
const char* ProblemName(ProblemKind kind);
ProblemKind ParseProblem(const std::string& name);

struct GeneratorSpec {
  ProblemKind problem = ProblemKind::kKnapsack;
  Family family = Family::kUniform;
  int64_t n = 10;
  int64_t w_max = 10;
  int64_t p_max = 10;
  int64_t u_max = 1;
  // Capacity is round(rho * total weight) unless `fixed_capacity` >= 0.
  double rho = 0.5;
  int64_t fixed_capacity = -1;
  uint64_t seed = 0;

  // Throws InvalidInputError unless all sizes are positive and rho is in
  // (0, 1].
  void Validate() const;
};

struct GeneratedInstance {
  ProblemKind problem = ProblemKind::kKnapsack;
  KnapsackInstance knapsack;      // set when problem == kKnapsack
  SubsetSumInstance subset_sum;   // set when problem == kSubsetSum
};

// Deterministic in the spec: item i draws from a generator keyed by
// (seed, family, i).
GeneratedInstance Generate(const GeneratorSpec& spec);

// Compact JSON object carrying every field of the spec.
std::string SpecToJson(const GeneratorSpec& spec);
// Inverse of SpecToJson; missing fields keep their defaults. Throws
// ParseError on malformed JSON or bad field types.
GeneratorSpec SpecFromJson(const std::string& text);

}  // namespace proxiknap

#endif  // PROXIKNAP_INSTANCE_GEN_H_
