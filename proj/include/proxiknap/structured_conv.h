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

// (max,+)-convolution with step-concave operands: profiles of a single weight
// class, where index i * w holds the best profit of i copies.

#ifndef PROXIKNAP_STRUCTURED_CONV_H_
#define PROXIKNAP_STRUCTURED_CONV_H_

#include <cstdint>
#include <span>
#include <vector>

#include "proxiknap/model.h"

namespace proxiknap {

// Minus infinity. Far enough from INT64_MIN that sums of two sentinels and a
// profit cannot wrap; use SaturatingAdd anyway.
inline constexpr int64_t kNegInf = INT64_MIN / 4;

inline int64_t SaturatingAdd(int64_t a, int64_t b) {
  if (a <= kNegInf || b <= kNegInf) return kNegInf;
  return a + b;
}

// Indexed by total weight.
using ProfitSequence = std::vector<int64_t>;

enum class StepOrder {
  kMostValuableFirst,          // prefix[i] = profit of the i best copies
  kLeastValuableFirstNegated,  // prefix[i] = -(profit of the i worst copies)
};

// The profile of one weight: prefix[i] for i copies, i <= max count.
struct StepProfile {
  int64_t weight = 1;
  std::vector<int64_t> prefix;  // concave; prefix[0] == 0

  int64_t MaxCopies() const {
    return static_cast<int64_t>(prefix.size()) - 1;
  }
  // The dense sequence with NEG_INF off the multiples of weight.
  ProfitSequence Dense() const;
};

// Builds the profile of `items`, which must all have weight `weight`, keeping
// at most floor(cap / weight) copies. Multiplicities are expanded lazily.
StepProfile BuildStepProfile(std::span<const Item> items, int64_t weight,
                             int64_t cap,
                             StepOrder order = StepOrder::kMostValuableFirst);

// result[i] = max_j x[i - j * w] + prefix[j], truncated to indices <= cap.
// Linear time per call via SMAWK on each residue class modulo w. If `copies`
// is non-null it receives, for each output index, the chosen j (0 where the
// result is NEG_INF).
ProfitSequence ConcaveStepConvolve(const ProfitSequence& x,
                                   const StepProfile& profile, int64_t cap,
                                   std::vector<uint32_t>* copies = nullptr);

// Quadratic reference for ConcaveStepConvolve over arbitrary operands.
ProfitSequence BruteForceMaxPlus(const ProfitSequence& x,
                                 const ProfitSequence& y, int64_t cap);

// result[i] = max_{j <= i} x[j], padded with the final maximum up to index
// extend_to.
ProfitSequence PrefixMaxima(const ProfitSequence& x, int64_t extend_to = 0);

}  // namespace proxiknap

#endif  // PROXIKNAP_STRUCTURED_CONV_H_
