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

#include "proxiknap/structured_conv.h"

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "proxiknap/errors.h"
#include "proxiknap/smawk.h"

namespace proxiknap {
namespace {

// Penalty for a NEG_INF operand entry; larger than any band penalty.
constexpr int64_t kHuge = int64_t{1} << 50;

}  // namespace

ProfitSequence StepProfile::Dense() const {
  ProfitSequence out(static_cast<size_t>(MaxCopies() * weight) + 1, kNegInf);
  for (size_t i = 0; i < prefix.size(); ++i) {
    out[i * static_cast<size_t>(weight)] = prefix[i];
  }
  return out;
}

StepProfile BuildStepProfile(std::span<const Item> items, int64_t weight,
                             int64_t cap, StepOrder order) {
  if (weight < 1) throw InvalidInputError("BuildStepProfile: weight < 1");
  StepProfile profile;
  profile.weight = weight;
  profile.prefix.push_back(0);
  const int64_t limit = std::max<int64_t>(cap, 0) / weight;
  if (limit == 0 || items.empty()) return profile;

  std::vector<std::pair<int64_t, int64_t>> copies;  // (profit, count)
  copies.reserve(items.size());
  for (const Item& item : items) {
    if (item.weight != weight) {
      throw InvalidInputError("BuildStepProfile: mixed weights");
    }
    copies.emplace_back(item.profit, item.multiplicity);
  }
  const bool best_first = order == StepOrder::kMostValuableFirst;
  std::sort(copies.begin(), copies.end(), [&](const auto& a, const auto& b) {
    return best_first ? a.first > b.first : a.first < b.first;
  });
  int64_t sum = 0;
  for (const auto& [profit, count] : copies) {
    const int64_t step = best_first ? profit : -profit;
    for (int64_t c = 0; c < count && profile.MaxCopies() < limit; ++c) {
      sum += step;
      profile.prefix.push_back(sum);
    }
    if (profile.MaxCopies() >= limit) break;
  }
  return profile;
}

ProfitSequence ConcaveStepConvolve(const ProfitSequence& x,
                                   const StepProfile& profile, int64_t cap,
                                   std::vector<uint32_t>* copies) {
  if (cap < 0 || x.empty()) {
    if (copies != nullptr) copies->clear();
    return {};
  }
  const int64_t w = profile.weight;
  const int64_t m = profile.MaxCopies();
  const int64_t x_len = static_cast<int64_t>(x.size());
  const int64_t out_len = std::min(cap, x_len - 1 + m * w) + 1;
  ProfitSequence out(static_cast<size_t>(out_len), kNegInf);
  if (copies != nullptr) copies->assign(static_cast<size_t>(out_len), 0);
  const std::vector<int64_t>& s = profile.prefix;

  for (int64_t r = 0; r < w && r < out_len; ++r) {
    const int64_t rows = (out_len - 1 - r) / w + 1;
    const int64_t cols = r < x_len ? (x_len - 1 - r) / w + 1 : 0;
    if (cols == 0) continue;
    auto x_at = [&](size_t a) {
      return x[static_cast<size_t>(r + static_cast<int64_t>(a) * w)];
    };
    // Lexicographic (penalty, value): the penalty is a concave function of
    // b - a that vanishes exactly on the band 0 <= b - a <= m, plus a column
    // term for NEG_INF operands. Both keep the matrix totally monotone.
    auto entry = [&](size_t b, size_t a) {
      const int64_t d = static_cast<int64_t>(b) - static_cast<int64_t>(a);
      const int64_t xa = x_at(a);
      const bool finite = xa > kNegInf;
      const int64_t penalty =
          std::min<int64_t>(0, d) + std::min<int64_t>(0, m - d) -
          (finite ? 0 : kHuge);
      const int64_t value =
          s[static_cast<size_t>(std::clamp<int64_t>(d, 0, m))] +
          (finite ? xa : 0);
      return std::pair<int64_t, int64_t>(penalty, value);
    };
    const std::vector<size_t> argmax = SmawkRowMaxima(
        static_cast<size_t>(rows), static_cast<size_t>(cols), entry);
    for (int64_t b = 0; b < rows; ++b) {
      const auto [penalty, value] =
          entry(static_cast<size_t>(b), argmax[static_cast<size_t>(b)]);
      if (penalty < 0) continue;
      const size_t index = static_cast<size_t>(r + b * w);
      out[index] = value;
      if (copies != nullptr) {
        (*copies)[index] =
            static_cast<uint32_t>(b - static_cast<int64_t>(argmax[b]));
      }
    }
  }
  return out;
}

ProfitSequence BruteForceMaxPlus(const ProfitSequence& x,
                                 const ProfitSequence& y, int64_t cap) {
  if (cap < 0 || x.empty() || y.empty()) return {};
  const size_t len = std::min<size_t>(static_cast<size_t>(cap) + 1,
                                      x.size() + y.size() - 1);
  ProfitSequence out(len, kNegInf);
  for (size_t i = 0; i < x.size() && i < len; ++i) {
    for (size_t j = 0; i + j < len && j < y.size(); ++j) {
      out[i + j] = std::max(out[i + j], SaturatingAdd(x[i], y[j]));
    }
  }
  return out;
}

ProfitSequence PrefixMaxima(const ProfitSequence& x, int64_t extend_to) {
  const size_t len =
      std::max(x.size(), static_cast<size_t>(std::max<int64_t>(extend_to, -1) + 1));
  ProfitSequence out(len, kNegInf);
  int64_t running = kNegInf;
  for (size_t i = 0; i < len; ++i) {
    if (i < x.size()) running = std::max(running, x[i]);
    out[i] = running;
  }
  return out;
}

}  // namespace proxiknap
