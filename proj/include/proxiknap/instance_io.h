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

// Instance files. The text format is
//
//   # generator: {"family": ...}      (optional provenance header)
//   KNAPSACK n t                      or  SUBSETSUM n t
//   w p u                                 w u
//   ...
//
// with '#' starting comment lines. Files ending in ".json" use
//   {"problem": "knapsack", "n": 2, "t": 5,
//    "items": [{"w": 3, "p": 4, "u": 1}, ...], "generator": {...}}

#ifndef PROXIKNAP_INSTANCE_IO_H_
#define PROXIKNAP_INSTANCE_IO_H_

#include <optional>
#include <string>

#include "proxiknap/instance_gen.h"
#include "proxiknap/model.h"

namespace proxiknap {

struct InstanceFile {
  ProblemKind problem = ProblemKind::kKnapsack;
  KnapsackInstance knapsack;
  SubsetSumInstance subset_sum;
  std::optional<std::string> generator;  // compact JSON spec
};

// Throws ParseError on malformed input.
InstanceFile ParseInstanceText(const std::string& text);
InstanceFile ParseInstanceJson(const std::string& text);

std::string FormatInstanceText(const InstanceFile& file);
std::string FormatInstanceJson(const InstanceFile& file);

// Chooses the format by extension. Throws ParseError, or IoError when the
// file cannot be read or written.
InstanceFile ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const std::string& path, const InstanceFile& file);

// FNV-1a of the text serialization without the provenance header, as 16 hex
// digits.
std::string InstanceHash(const InstanceFile& file);

}  // namespace proxiknap

#endif  // PROXIKNAP_INSTANCE_IO_H_
