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

// Row maxima of an implicit totally monotone matrix.

#ifndef PROXIKNAP_SMAWK_H_
#define PROXIKNAP_SMAWK_H_

#include <cstddef>
#include <vector>

namespace proxiknap {
namespace internal {

template <typename Entry>
void SmawkRecurse(const std::vector<size_t>& rows,
                  const std::vector<size_t>& cols, Entry& entry,
                  std::vector<size_t>& argmax) {
  if (rows.empty()) return;

  // Reduce to at most |rows| candidate columns.
  std::vector<size_t> kept;
  kept.reserve(rows.size());
  for (size_t c : cols) {
    while (!kept.empty()) {
      const size_t row = rows[kept.size() - 1];
      if (entry(row, kept.back()) < entry(row, c)) {
        kept.pop_back();
      } else {
        break;
      }
    }
    if (kept.size() < rows.size()) kept.push_back(c);
  }

  std::vector<size_t> odd;
  odd.reserve(rows.size() / 2);
  for (size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
  SmawkRecurse(odd, kept, entry, argmax);

  size_t start = 0;
  for (size_t i = 0; i < rows.size(); i += 2) {
    const size_t row = rows[i];
    size_t stop = kept.size() - 1;
    if (i + 1 < rows.size()) {
      const size_t target = argmax[rows[i + 1]];
      stop = start;
      while (kept[stop] != target) ++stop;
    }
    size_t best = kept[start];
    auto best_value = entry(row, best);
    for (size_t k = start + 1; k <= stop; ++k) {
      auto value = entry(row, kept[k]);
      if (best_value < value) {
        best = kept[k];
        best_value = value;
      }
    }
    argmax[row] = best;
    start = stop;
  }
}

}  // namespace internal

// Leftmost column of the maximum in each row of a rows x cols matrix given by
// entry(row, col). The matrix must be totally monotone for maxima: leftmost
// argmax columns are non-decreasing down the rows. Entries need only be
// ordered by operator<. Makes O(rows + cols) calls to `entry`.
template <typename Entry>
std::vector<size_t> SmawkRowMaxima(size_t rows, size_t cols, Entry&& entry) {
  std::vector<size_t> argmax(rows, 0);
  if (rows == 0 || cols == 0) return argmax;
  std::vector<size_t> row_ids(rows), col_ids(cols);
  for (size_t i = 0; i < rows; ++i) row_ids[i] = i;
  for (size_t j = 0; j < cols; ++j) col_ids[j] = j;
  internal::SmawkRecurse(row_ids, col_ids, entry, argmax);
  return argmax;
}

}  // namespace proxiknap

#endif  // PROXIKNAP_SMAWK_H_
