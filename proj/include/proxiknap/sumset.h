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

// Sets of attainable sums and the sumset operations on them:
//
//   A + B = { a + b : a in A u {0}, b in B u {0} }
//
// Every AttainableSet contains 0, so A + B is simply the Minkowski sum,
// truncated to a cap that is threaded explicitly through every call.

#ifndef PROXIKNAP_SUMSET_H_
#define PROXIKNAP_SUMSET_H_

#include <cstdint>
#include <span>
#include <vector>

#include "proxiknap/bitset.h"

namespace proxiknap {

class AttainableSet {
 public:
  // The set {0} with the given cap.
  explicit AttainableSet(int64_t cap = 0);

  // {0} u elements, dropping elements above cap.
  static AttainableSet FromElements(std::span<const int64_t> elements,
                                    int64_t cap);
  // Takes ownership of an indicator vector; bit 0 is forced on and the cap is
  // bits.size() - 1.
  static AttainableSet FromBits(DynamicBitset bits);

  int64_t cap() const { return static_cast<int64_t>(bits_.size()) - 1; }
  bool Contains(int64_t value) const {
    return value >= 0 && bits_.Test(static_cast<size_t>(value));
  }
  void Insert(int64_t value);
  // Largest element (m_S).
  int64_t Max() const;
  size_t Size() const { return bits_.Count(); }
  std::vector<int64_t> Elements() const;
  const DynamicBitset& bits() const { return bits_; }

  // Same elements, regardless of cap.
  bool operator==(const AttainableSet& other) const;

 private:
  DynamicBitset bits_;
};

// Exact Minkowski sum {a + b} of two indicator vectors (no implicit zero),
// truncated to [0, cap]. Small operands use shift-or; large ones a boolean
// convolution through the number-theoretic transform.
DynamicBitset MinkowskiSum(const DynamicBitset& a, const DynamicBitset& b,
                           int64_t cap);

AttainableSet PairwiseSumset(const AttainableSet& a, const AttainableSet& b,
                             int64_t cap);

// S_1 + ... + S_l by balanced pairwise merging.
AttainableSet MultiSumset(std::span<const AttainableSet> sets, int64_t cap);

// factor * A, truncated to cap.
AttainableSet Scale(const AttainableSet& set, int64_t factor, int64_t cap);

// Decides target in S_0 + k S_1 + k^2 S_2 + ... + k^l S_l by peeling the
// residue of the target modulo k off S_0 and recursing on the scaled-down
// instance. Throws InvalidInputError for k < 1 or a negative target.
bool KaryMembership(std::span<const AttainableSet> sets, int64_t k,
                    int64_t target);

// Bytes of bit vectors produced by sumset operations on this thread since the
// last reset.
int64_t SumsetBytes();
void ResetSumsetBytes();

}  // namespace proxiknap

#endif  // PROXIKNAP_SUMSET_H_
