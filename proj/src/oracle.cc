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

#include "proxiknap/oracle.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "proxiknap/bitset.h"
#include "proxiknap/errors.h"

namespace proxiknap {
namespace {

struct Piece {
  size_t item;
  int64_t count;
};

// u = 1 + 2 + 4 + ... + remainder.
std::vector<Piece> BinarySplit(std::span<const int64_t> multiplicities) {
  std::vector<Piece> pieces;
  for (size_t i = 0; i < multiplicities.size(); ++i) {
    int64_t left = multiplicities[i];
    for (int64_t c = 1; left > 0; c *= 2) {
      const int64_t take = std::min(c, left);
      pieces.push_back({i, take});
      left -= take;
    }
  }
  return pieces;
}

void CheckBudget(double cells, const char* what) {
  if (cells > static_cast<double>(OracleCellCap())) {
    throw ResourceLimitError(std::string(what) + ": exceeds oracle cell cap");
  }
}

}  // namespace

int64_t OracleCellCap() {
  if (const char* env = std::getenv("PROXIKNAP_ORACLE_CAP")) {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultOracleCellCap;
}

OptResult DpKnapsack(const KnapsackInstance& instance) {
  const int64_t t = instance.capacity;
  const size_t n = instance.items.size();
  OptResult result;
  result.solution.assign(n, 0);
  if (t <= 0 || n == 0) return result;

  std::vector<int64_t> multiplicities(n);
  for (size_t i = 0; i < n; ++i) {
    multiplicities[i] = instance.items[i].multiplicity;
  }
  const std::vector<Piece> pieces = BinarySplit(multiplicities);
  CheckBudget(static_cast<double>(pieces.size()) * static_cast<double>(t + 1),
              "DpKnapsack");

  const size_t width = static_cast<size_t>(t) + 1;
  std::vector<int64_t> best(width, 0);
  std::vector<DynamicBitset> taken(pieces.size(), DynamicBitset(width));
  for (size_t k = 0; k < pieces.size(); ++k) {
    const Item& item = instance.items[pieces[k].item];
    const int64_t w = item.weight * pieces[k].count;
    const int64_t p = item.profit * pieces[k].count;
    for (int64_t c = t; c >= w; --c) {
      const int64_t candidate = best[static_cast<size_t>(c - w)] + p;
      if (candidate > best[static_cast<size_t>(c)]) {
        best[static_cast<size_t>(c)] = candidate;
        taken[k].Set(static_cast<size_t>(c));
      }
    }
  }
  result.value = best[static_cast<size_t>(t)];
  int64_t c = t;
  for (size_t k = pieces.size(); k-- > 0;) {
    if (taken[k].Test(static_cast<size_t>(c))) {
      const Item& item = instance.items[pieces[k].item];
      result.solution[pieces[k].item] += pieces[k].count;
      c -= item.weight * pieces[k].count;
    }
  }
  return result;
}

OptResult BruteForceKnapsack(const KnapsackInstance& instance) {
  const size_t n = instance.items.size();
  double combos = 1.0;
  for (const Item& item : instance.items) {
    combos *= static_cast<double>(item.multiplicity + 1);
  }
  CheckBudget(combos, "BruteForceKnapsack");

  OptResult best;
  best.solution.assign(n, 0);
  std::vector<int64_t> current(n, 0);
  auto recurse = [&](auto&& self, size_t i, int64_t weight,
                     int64_t profit) -> void {
    if (i == n) {
      if (profit > best.value) {
        best.value = profit;
        best.solution = current;
      }
      return;
    }
    const Item& item = instance.items[i];
    for (int64_t x = 0; x <= item.multiplicity; ++x) {
      const int64_t w = weight + x * item.weight;
      if (w > instance.capacity) break;
      current[i] = x;
      self(self, i + 1, w, profit + x * item.profit);
    }
    current[i] = 0;
  };
  recurse(recurse, 0, 0, 0);
  return best;
}

AttainableSet DpSumsUpto(std::span<const WeightCount> pairs, int64_t cap) {
  DynamicBitset bits(static_cast<size_t>(std::max<int64_t>(cap, 0)) + 1);
  bits.Set(0);
  std::vector<int64_t> multiplicities;
  multiplicities.reserve(pairs.size());
  for (const WeightCount& wc : pairs) multiplicities.push_back(wc.multiplicity);
  for (const Piece& piece : BinarySplit(multiplicities)) {
    const int64_t shift = pairs[piece.item].weight * piece.count;
    if (shift > cap) continue;
    DynamicBitset copy = bits;
    bits.OrShifted(copy, static_cast<size_t>(shift));
  }
  return AttainableSet::FromBits(std::move(bits));
}

OptResult MinDistanceOptimal(const KnapsackInstance& instance,
                             std::span<const int64_t> reference) {
  const int64_t t = instance.capacity;
  const size_t n = instance.items.size();
  if (reference.size() != n) {
    throw InvalidInputError("MinDistanceOptimal: reference size mismatch");
  }
  const size_t width = static_cast<size_t>(std::max<int64_t>(t, 0)) + 1;
  double cells = 0;
  for (const Item& item : instance.items) {
    cells += static_cast<double>(item.multiplicity + 1) *
             static_cast<double>(width);
  }
  CheckBudget(cells, "MinDistanceOptimal");

  // Lexicographic (profit, -distance) over weight <= c.
  using Score = std::pair<int64_t, int64_t>;
  std::vector<Score> f(width, Score{0, 0});
  std::vector<std::vector<int32_t>> choice(n, std::vector<int32_t>(width, 0));
  for (size_t i = 0; i < n; ++i) {
    const Item& item = instance.items[i];
    std::vector<Score> g(width);
    for (size_t c = 0; c < width; ++c) {
      Score best{INT64_MIN, INT64_MIN};
      int32_t arg = 0;
      for (int64_t x = 0; x <= item.multiplicity; ++x) {
        const int64_t w = x * item.weight;
        if (w > static_cast<int64_t>(c)) break;
        const Score& prev = f[c - static_cast<size_t>(w)];
        const Score s{prev.first + x * item.profit,
                      prev.second - std::abs(x - reference[i])};
        if (s > best) {
          best = s;
          arg = static_cast<int32_t>(x);
        }
      }
      g[c] = best;
      choice[i][c] = arg;
    }
    f = std::move(g);
  }
  OptResult result;
  result.value = f[width - 1].first;
  result.solution.assign(n, 0);
  size_t c = width - 1;
  for (size_t i = n; i-- > 0;) {
    const int32_t x = choice[i][c];
    result.solution[i] = x;
    c -= static_cast<size_t>(x * instance.items[i].weight);
  }
  return result;
}

int64_t L1Distance(std::span<const int64_t> a, std::span<const int64_t> b) {
  int64_t total = 0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    total += std::abs(a[i] - b[i]);
  }
  return total;
}

}  // namespace proxiknap
