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

#include "proxiknap/bitset.h"

#include <algorithm>

namespace proxiknap {

size_t DynamicBitset::Count() const {
  size_t count = 0;
  for (uint64_t word : words_) count += std::popcount(word);
  return count;
}

bool DynamicBitset::Any() const {
  return std::any_of(words_.begin(), words_.end(),
                     [](uint64_t word) { return word != 0; });
}

std::optional<size_t> DynamicBitset::Highest() const {
  for (size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) {
      return w * 64 + 63 - static_cast<size_t>(std::countl_zero(words_[w]));
    }
  }
  return std::nullopt;
}

void DynamicBitset::Resize(size_t size) {
  size_ = size;
  words_.resize((size + 63) / 64, 0);
  ClearTail();
}

void DynamicBitset::OrShifted(const DynamicBitset& other, size_t shift) {
  if (shift >= size_) return;
  const size_t word_shift = shift >> 6;
  const unsigned bit_shift = static_cast<unsigned>(shift & 63);
  const size_t n = words_.size();
  const size_t m = other.words_.size();
  // Destination word d receives bits from source words d - word_shift and
  // d - word_shift - 1.
  const size_t last = std::min(n, m + word_shift + (bit_shift != 0 ? 1 : 0));
  if (bit_shift == 0) {
    for (size_t d = word_shift; d < last; ++d) {
      words_[d] |= other.words_[d - word_shift];
    }
  } else {
    for (size_t d = word_shift; d < last; ++d) {
      const size_t s = d - word_shift;
      uint64_t value = 0;
      if (s < m) value |= other.words_[s] << bit_shift;
      if (s >= 1 && s - 1 < m) value |= other.words_[s - 1] >> (64 - bit_shift);
      words_[d] |= value;
    }
  }
  ClearTail();
}

bool DynamicBitset::IntersectsShiftedDown(const DynamicBitset& other,
                                          size_t shift) const {
  const size_t word_shift = shift >> 6;
  const unsigned bit_shift = static_cast<unsigned>(shift & 63);
  const size_t m = other.words_.size();
  for (size_t d = 0; d < words_.size(); ++d) {
    const size_t s = d + word_shift;
    if (s >= m) break;
    uint64_t value = other.words_[s] >> bit_shift;
    if (bit_shift != 0 && s + 1 < m) {
      value |= other.words_[s + 1] << (64 - bit_shift);
    }
    if ((value & words_[d]) != 0) return true;
  }
  return false;
}

void DynamicBitset::ClearTail() {
  if (words_.empty()) return;
  const unsigned used = static_cast<unsigned>(size_ & 63);
  if (used != 0) words_.back() &= (uint64_t{1} << used) - 1;
}

}  // namespace proxiknap
