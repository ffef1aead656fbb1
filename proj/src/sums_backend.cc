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

#include "proxiknap/sums_backend.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "proxiknap/errors.h"
#include "proxiknap/oracle.h"

namespace proxiknap {
namespace {

// Sums of subsets of `elements` of size at most k, each found with
// probability >= 1 - delta. Every repetition hashes the elements into k^2
// classes and adds one element per class, so only genuine subset sums appear.
AttainableSet ColorCoding(std::span<const int64_t> elements, int64_t cap,
                          int64_t k, double delta, CounterRng& rng) {
  AttainableSet result(cap);
  if (elements.empty()) return result;
  const int64_t reps = std::max<int64_t>(
      1, static_cast<int64_t>(std::ceil(std::log(1.0 / delta) /
                                        std::log(4.0 / 3.0))));
  const double classes_d = static_cast<double>(k) * static_cast<double>(k);
  const int64_t classes =
      classes_d > 1e15 ? int64_t{1} << 50 : static_cast<int64_t>(classes_d);
  std::vector<std::pair<int64_t, int64_t>> tagged(elements.size());
  for (int64_t rep = 0; rep < reps; ++rep) {
    for (size_t i = 0; i < elements.size(); ++i) {
      tagged[i] = {UniformInt(rng, 0, std::max<int64_t>(classes, 1) - 1),
                   elements[i]};
    }
    std::sort(tagged.begin(), tagged.end());
    std::vector<AttainableSet> sets;
    for (size_t i = 0; i < tagged.size();) {
      AttainableSet set(cap);
      size_t j = i;
      for (; j < tagged.size() && tagged[j].first == tagged[i].first; ++j) {
        set.Insert(tagged[j].second);
      }
      sets.push_back(std::move(set));
      i = j;
    }
    DynamicBitset bits = MultiSumset(sets, cap).bits();
    DynamicBitset merged = result.bits();
    merged.OrWith(bits);
    result = AttainableSet::FromBits(std::move(merged));
  }
  return result;
}

// Elements all lie in [cap / l, 2 cap / l], so at most l of them fit in a
// sum <= cap. Splits into m groups that each need only O(log(l / delta))
// elements, color-codes the groups and merges them in a balanced tree.
AttainableSet ColorCodingLayer(std::span<const int64_t> elements, int64_t cap,
                               int64_t l, double delta, CounterRng& rng) {
  if (elements.empty()) return AttainableSet(cap);
  const double lg = std::log2(static_cast<double>(l) / delta);
  if (static_cast<double>(l) < lg) {
    return ColorCoding(elements, cap, l, delta, rng);
  }
  int64_t m = 1;
  while (static_cast<double>(m * 2) <= static_cast<double>(l) / lg) m *= 2;
  const double gamma = 6.0 * lg;
  const int64_t part_cap = std::min<int64_t>(
      cap, static_cast<int64_t>(std::ceil(2.0 * gamma *
                                          static_cast<double>(cap) /
                                          static_cast<double>(l))));
  std::vector<std::vector<int64_t>> parts(static_cast<size_t>(m));
  for (int64_t e : elements) {
    parts[static_cast<size_t>(UniformInt(rng, 0, m - 1))].push_back(e);
  }
  std::vector<AttainableSet> level;
  level.reserve(parts.size());
  for (const std::vector<int64_t>& part : parts) {
    level.push_back(ColorCoding(part, part_cap,
                                static_cast<int64_t>(std::ceil(gamma)),
                                delta / static_cast<double>(l), rng));
  }
  int64_t level_cap = part_cap;
  while (level.size() > 1) {
    level_cap = std::min(cap, level_cap * 2);
    std::vector<AttainableSet> next;
    for (size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(PairwiseSumset(level[i], level[i + 1], level_cap));
    }
    level = std::move(next);
  }
  DynamicBitset bits = level.front().bits();
  bits.Resize(static_cast<size_t>(cap) + 1);
  return AttainableSet::FromBits(std::move(bits));
}

}  // namespace

const char* BackendName(SumsBackend backend) {
  switch (backend) {
    case SumsBackend::kAuto:
      return "auto";
    case SumsBackend::kExact:
      return "exact";
    case SumsBackend::kRandomized:
      return "randomized";
  }
  return "unknown";
}

AttainableSet RandomizedSumsUpto(std::span<const WeightCount> pairs,
                                 int64_t cap, double delta, CounterRng& rng) {
  if (cap < 0) throw InvalidInputError("cap must be non-negative");
  if (!(delta > 0 && delta < 1)) {
    throw InvalidInputError("delta must lie in (0, 1)");
  }
  // Binary splitting turns multiplicities into distinct elements whose
  // subset sums are exactly the bounded multiset sums.
  std::vector<int64_t> elements;
  for (const WeightCount& pair : pairs) {
    int64_t left = pair.multiplicity;
    for (int64_t c = 1; left > 0; c *= 2) {
      const int64_t take = std::min(c, left);
      left -= take;
      if (take <= cap / pair.weight) elements.push_back(take * pair.weight);
    }
  }
  if (elements.empty() || cap == 0) return AttainableSet(cap);

  const int64_t n = static_cast<int64_t>(elements.size());
  int64_t layers = 1;
  while ((int64_t{1} << layers) < n) ++layers;
  const double layer_delta = delta / static_cast<double>(layers);
  std::vector<AttainableSet> results;
  for (int64_t i = 1; i <= layers; ++i) {
    // Layer i < L holds (cap / 2^i, cap / 2^(i-1)]; the last holds the rest.
    std::vector<int64_t> layer;
    for (int64_t e : elements) {
      const bool above = i == layers || e > (cap >> i);
      const bool below = e <= (cap >> (i - 1));
      if (above && below) layer.push_back(e);
    }
    if (layer.empty()) continue;
    results.push_back(
        ColorCodingLayer(layer, cap, int64_t{1} << i, layer_delta, rng));
  }
  return MultiSumset(results, cap);
}

AttainableSet BoundedSumsUpto(std::span<const WeightCount> pairs, int64_t cap,
                              CounterRng& rng, SumsBackend backend) {
  if (cap < 0) throw InvalidInputError("cap must be non-negative");
  if (backend == SumsBackend::kAuto) {
    const double cells =
        static_cast<double>(pairs.size()) * static_cast<double>(cap + 1);
    backend = cells <= kExactBackendCells ? SumsBackend::kExact
                                          : SumsBackend::kRandomized;
  }
  if (backend == SumsBackend::kExact) return DpSumsUpto(pairs, cap);
  const double n = static_cast<double>(pairs.size());
  const double c = static_cast<double>(cap);
  return RandomizedSumsUpto(pairs, cap, 1.0 / ((n + c + 1) * (c + 1) + 1),
                            rng);
}

}  // namespace proxiknap
