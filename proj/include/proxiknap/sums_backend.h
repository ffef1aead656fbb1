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

// All attainable sums up to a cap of a bounded multiset, with an exact and a
// randomized (layer splitting plus color coding) backend.

#ifndef PROXIKNAP_SUMS_BACKEND_H_
#define PROXIKNAP_SUMS_BACKEND_H_

#include <cstdint>
#include <span>

#include "proxiknap/model.h"
#include "proxiknap/rng.h"
#include "proxiknap/sumset.h"

namespace proxiknap {

enum class SumsBackend {
  kAuto,        // exact when pairs * cap <= kExactBackendCells
  kExact,       // bit-vector dynamic program
  kRandomized,  // color coding; never reports a non-attainable sum
};

inline constexpr double kExactBackendCells = 1e8;

const char* BackendName(SumsBackend backend);

// A subset of { s <= cap : s = sum x_i w_i, 0 <= x_i <= u_i }. The exact
// backend returns the whole set. The randomized backend misses any given
// element with probability at most 1 / ((n + cap) * (cap + 1)), so the whole
// set is exact with probability at least 1 - 1 / (n + cap).
AttainableSet BoundedSumsUpto(std::span<const WeightCount> pairs, int64_t cap,
                              CounterRng& rng,
                              SumsBackend backend = SumsBackend::kAuto);

// The randomized backend with an explicit per-element failure bound.
AttainableSet RandomizedSumsUpto(std::span<const WeightCount> pairs,
                                 int64_t cap, double delta, CounterRng& rng);

}  // namespace proxiknap

#endif  // PROXIKNAP_SUMS_BACKEND_H_
