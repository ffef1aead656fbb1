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

#include "proxiknap/ntt.h"

#include <utility>

namespace proxiknap {

namespace {

constexpr uint32_t kGenerator = 3;

uint32_t PowMod(uint64_t base, uint64_t exp) {
  uint64_t result = 1;
  base %= kNttModulus;
  while (exp > 0) {
    if (exp & 1) result = result * base % kNttModulus;
    base = base * base % kNttModulus;
    exp >>= 1;
  }
  return static_cast<uint32_t>(result);
}

void Transform(std::vector<uint32_t>& a, bool inverse) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<uint32_t> roots;
  for (size_t len = 2; len <= n; len <<= 1) {
    uint32_t step = PowMod(kGenerator, (kNttModulus - 1) / len);
    if (inverse) step = PowMod(step, kNttModulus - 2);
    const size_t half = len >> 1;
    roots.assign(half, 1);
    for (size_t k = 1; k < half; ++k) {
      roots[k] = static_cast<uint32_t>(uint64_t{roots[k - 1]} * step %
                                       kNttModulus);
    }
    for (size_t i = 0; i < n; i += len) {
      for (size_t k = 0; k < half; ++k) {
        const uint32_t u = a[i + k];
        const uint32_t v = static_cast<uint32_t>(
            uint64_t{a[i + k + half]} * roots[k] % kNttModulus);
        const uint32_t sum = u + v;
        a[i + k] = sum >= kNttModulus ? sum - kNttModulus : sum;
        a[i + k + half] = u >= v ? u - v : u + kNttModulus - v;
      }
    }
  }
  if (inverse) {
    const uint64_t n_inv = PowMod(n, kNttModulus - 2);
    for (uint32_t& x : a) x = static_cast<uint32_t>(x * n_inv % kNttModulus);
  }
}

}  // namespace

std::vector<uint32_t> ConvolveMod(std::span<const uint32_t> a,
                                  std::span<const uint32_t> b) {
  if (a.empty() || b.empty()) return {};
  const size_t out = a.size() + b.size() - 1;
  size_t n = 1;
  while (n < out) n <<= 1;
  std::vector<uint32_t> fa(a.begin(), a.end());
  std::vector<uint32_t> fb(b.begin(), b.end());
  fa.resize(n, 0);
  fb.resize(n, 0);
  Transform(fa, false);
  Transform(fb, false);
  for (size_t i = 0; i < n; ++i) {
    fa[i] = static_cast<uint32_t>(uint64_t{fa[i]} * fb[i] % kNttModulus);
  }
  Transform(fa, true);
  fa.resize(out);
  return fa;
}

}  // namespace proxiknap
