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

#ifndef PROXIKNAP_BITSET_H_
#define PROXIKNAP_BITSET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace proxiknap {

// Fixed-size bit vector with the shift-or primitive used by the subset-sum
// dynamic programs. Bits at positions >= size() are always zero.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  size_t size() const { return size_; }
  size_t Bytes() const { return words_.size() * sizeof(uint64_t); }

  void Set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void Reset(size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool Test(size_t i) const {
    return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1) != 0;
  }

  size_t Count() const;
  bool Any() const;
  std::optional<size_t> Highest() const;

  // Changes the size, keeping the low bits.
  void Resize(size_t size);

  // *this |= other << shift, truncated to size().
  void OrShifted(const DynamicBitset& other, size_t shift);

  // *this |= other, truncated to size().
  void OrWith(const DynamicBitset& other) { OrShifted(other, 0); }

  // True if some i has Test(i) && other.Test(i + shift).
  bool IntersectsShiftedDown(const DynamicBitset& other, size_t shift) const;

  template <typename Fn>
  void ForEachSetBit(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t word = words_[w];
      while (word != 0) {
        fn(w * 64 + static_cast<size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  const std::vector<uint64_t>& words() const { return words_; }

  bool operator==(const DynamicBitset&) const = default;

 private:
  void ClearTail();

  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace proxiknap

#endif  // PROXIKNAP_BITSET_H_
