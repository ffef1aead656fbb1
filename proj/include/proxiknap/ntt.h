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

// Number-theoretic transform over the prime 998244353 = 119 * 2^23 + 1.

#ifndef PROXIKNAP_NTT_H_
#define PROXIKNAP_NTT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace proxiknap {

inline constexpr uint32_t kNttModulus = 998244353;
// Longest transform the modulus supports.
inline constexpr size_t kNttMaxLength = size_t{1} << 23;

// Cyclic-free product of two polynomials with coefficients mod kNttModulus.
// Requires a.size() + b.size() - 1 <= kNttMaxLength.
std::vector<uint32_t> ConvolveMod(std::span<const uint32_t> a,
                                  std::span<const uint32_t> b);

}  // namespace proxiknap

#endif  // PROXIKNAP_NTT_H_
