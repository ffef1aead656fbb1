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

#ifndef PROXIKNAP_RNG_H_
#define PROXIKNAP_RNG_H_

#include <cstdint>
#include <limits>

namespace proxiknap {

// splitmix64 finalizer.
uint64_t Mix64(uint64_t x);

// Counter-based generator: the i-th output is a pure function of
// (seed, stream, i), so independent streams can be split off without
// coordination. Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = uint64_t;

  explicit CounterRng(uint64_t seed, uint64_t stream = 0)
      : key_(Mix64(seed ^ Mix64(stream + 0x9e3779b97f4a7c15ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return Mix64(key_ + counter_++); }

  // A generator for an independent substream.
  CounterRng Split(uint64_t stream) const { return CounterRng(key_, stream); }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

// Uniform integer in [lo, hi] by rejection sampling; identical across
// platforms, unlike std::uniform_int_distribution.
int64_t UniformInt(CounterRng& rng, int64_t lo, int64_t hi);

}  // namespace proxiknap

#endif  // PROXIKNAP_RNG_H_
