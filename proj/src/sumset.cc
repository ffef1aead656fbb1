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

#include "proxiknap/sumset.h"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "proxiknap/bitset.h"
#include "proxiknap/errors.h"
#include "proxiknap/ntt.h"

namespace proxiknap {
namespace {

thread_local int64_t sumset_bytes = 0;

// Below this many set bits in the sparser operand, shift-or is cheaper than a
// transform.
constexpr size_t kShiftOrPopcount = 64;
constexpr size_t kShiftOrLength = 4096;

size_t SpanOf(const DynamicBitset& bits) {
  auto high = bits.Highest();
  return high.has_value() ? *high + 1 : 0;
}

DynamicBitset ShiftOrSum(const DynamicBitset& dense,
                         const DynamicBitset& sparse, size_t size) {
  DynamicBitset out(size);
  sparse.ForEachSetBit([&](size_t shift) {
    if (shift < size) out.OrShifted(dense, shift);
  });
  return out;
}

DynamicBitset NttSum(const DynamicBitset& a, size_t span_a,
                     const DynamicBitset& b, size_t span_b, size_t size) {
  std::vector<uint32_t> pa(span_a, 0), pb(span_b, 0);
  // Operands may extend past the cap; those bits cannot contribute.
  a.ForEachSetBit([&](size_t i) {
    if (i < span_a) pa[i] = 1;
  });
  b.ForEachSetBit([&](size_t i) {
    if (i < span_b) pb[i] = 1;
  });
  std::vector<uint32_t> prod = ConvolveMod(pa, pb);
  DynamicBitset out(size);
  // Coefficients count representations, which never exceed the transform
  // length and therefore never wrap to zero.
  const size_t limit = std::min(prod.size(), size);
  for (size_t i = 0; i < limit; ++i) {
    if (prod[i] != 0) out.Set(i);
  }
  return out;
}

}  // namespace

AttainableSet::AttainableSet(int64_t cap)
    : bits_(static_cast<size_t>(std::max<int64_t>(cap, 0)) + 1) {
  bits_.Set(0);
}

AttainableSet AttainableSet::FromElements(std::span<const int64_t> elements,
                                          int64_t cap) {
  AttainableSet set(cap);
  for (int64_t e : elements) {
    if (e >= 0 && e <= set.cap()) set.bits_.Set(static_cast<size_t>(e));
  }
  return set;
}

AttainableSet AttainableSet::FromBits(DynamicBitset bits) {
  if (bits.size() == 0) bits.Resize(1);
  AttainableSet set;
  set.bits_ = std::move(bits);
  set.bits_.Set(0);
  return set;
}

void AttainableSet::Insert(int64_t value) {
  if (value < 0 || value > cap()) return;
  bits_.Set(static_cast<size_t>(value));
}

int64_t AttainableSet::Max() const {
  return static_cast<int64_t>(*bits_.Highest());
}

std::vector<int64_t> AttainableSet::Elements() const {
  std::vector<int64_t> out;
  bits_.ForEachSetBit([&](size_t i) { out.push_back(static_cast<int64_t>(i)); });
  return out;
}

bool AttainableSet::operator==(const AttainableSet& other) const {
  return Elements() == other.Elements();
}

DynamicBitset MinkowskiSum(const DynamicBitset& a, const DynamicBitset& b,
                           int64_t cap) {
  const size_t size = static_cast<size_t>(std::max<int64_t>(cap, 0)) + 1;
  const size_t span_a = SpanOf(a);
  const size_t span_b = SpanOf(b);
  DynamicBitset out(size);
  if (span_a != 0 && span_b != 0) {
    const size_t count_a = a.Count();
    const size_t count_b = b.Count();
    const bool use_shift_or =
        std::min(span_a, span_b) <= kShiftOrLength ||
        std::min(count_a, count_b) <= kShiftOrPopcount ||
        span_a + span_b - 1 > kNttMaxLength;
    if (use_shift_or) {
      out = count_a <= count_b ? ShiftOrSum(b, a, size)
                               : ShiftOrSum(a, b, size);
    } else {
      out = NttSum(a, std::min(span_a, size), b, std::min(span_b, size),
                   size);
    }
  }
  sumset_bytes += static_cast<int64_t>(out.Bytes());
  return out;
}

AttainableSet PairwiseSumset(const AttainableSet& a, const AttainableSet& b,
                             int64_t cap) {
  return AttainableSet::FromBits(MinkowskiSum(a.bits(), b.bits(), cap));
}

AttainableSet MultiSumset(std::span<const AttainableSet> sets, int64_t cap) {
  cap = std::max<int64_t>(cap, 0);
  if (sets.empty()) return AttainableSet(cap);
  // Each operand keeps only its own reach, so merge costs follow the sum of
  // the maxima rather than the cap.
  std::vector<AttainableSet> level;
  level.reserve(sets.size());
  for (const AttainableSet& s : sets) {
    DynamicBitset bits = s.bits();
    bits.Resize(static_cast<size_t>(std::min(s.Max(), cap)) + 1);
    level.push_back(AttainableSet::FromBits(std::move(bits)));
  }
  while (level.size() > 1) {
    std::vector<AttainableSet> next;
    next.reserve((level.size() + 1) / 2);
    for (size_t i = 0; i + 1 < level.size(); i += 2) {
      const int64_t reach = std::min(cap, level[i].cap() + level[i + 1].cap());
      next.push_back(PairwiseSumset(level[i], level[i + 1], reach));
    }
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  DynamicBitset bits = level.front().bits();
  bits.Resize(static_cast<size_t>(cap) + 1);
  return AttainableSet::FromBits(std::move(bits));
}

AttainableSet Scale(const AttainableSet& set, int64_t factor, int64_t cap) {
  if (factor < 0) throw InvalidInputError("Scale: negative factor");
  AttainableSet out(cap);
  set.bits().ForEachSetBit([&](size_t i) {
    out.Insert(static_cast<int64_t>(i) * factor);
  });
  return out;
}

bool KaryMembership(std::span<const AttainableSet> sets, int64_t k,
                    int64_t target) {
  if (k < 1) throw InvalidInputError("KaryMembership: k must be positive");
  if (target < 0) {
    throw InvalidInputError("KaryMembership: target must be non-negative");
  }
  if (sets.empty()) return target == 0;
  // Running operand: the first set, then (S_bar - r) / k + S_next at each
  // level. The filtered set may lack 0, so the raw Minkowski sum is used.
  DynamicBitset current = sets[0].bits();
  int64_t t = target;
  for (size_t level = 1; level < sets.size(); ++level) {
    const int64_t r = t % k;
    const int64_t next_t = (t - r) / k;
    DynamicBitset filtered(static_cast<size_t>(next_t) + 1);
    bool any = false;
    current.ForEachSetBit([&](size_t index) {
      const int64_t s = static_cast<int64_t>(index);
      if (s > t || s % k != r) return;
      filtered.Set(static_cast<size_t>((s - r) / k));
      any = true;
    });
    if (!any) return false;
    current = MinkowskiSum(filtered, sets[level].bits(), next_t);
    t = next_t;
  }
  return current.Test(static_cast<size_t>(t));
}

int64_t SumsetBytes() { return sumset_bytes; }
void ResetSumsetBytes() { sumset_bytes = 0; }

}  // namespace proxiknap
