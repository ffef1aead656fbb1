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

#include "proxiknap/instance_gen.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "proxiknap/errors.h"
#include "proxiknap/rng.h"
#include "proxiknap/subset_sum.h"

namespace proxiknap {
namespace {

struct FamilyEntry {
  Family family;
  const char* name;
};

constexpr FamilyEntry kFamilies[] = {
    {Family::kUniform, "uniform"},
    {Family::kWmaxEqN, "wmax-eq-n"},
    {Family::kDeltaAdversarial, "delta-adversarial"},
    {Family::kDenseWeights, "dense-weights"},
    {Family::kSparseWeights, "sparse-weights"},
};

int64_t CapacityFor(const GeneratorSpec& spec, int64_t total) {
  if (spec.fixed_capacity >= 0) return spec.fixed_capacity;
  return static_cast<int64_t>(
      std::llround(spec.rho * static_cast<double>(total)));
}

std::vector<Item> DrawItems(const GeneratorSpec& spec) {
  const CounterRng base(spec.seed, static_cast<uint64_t>(spec.family));
  std::vector<Item> items;
  items.reserve(static_cast<size_t>(spec.n));

  std::vector<int64_t> palette;  // allowed weights for sparse-weights
  if (spec.family == Family::kSparseWeights) {
    CounterRng rng = base.Split(UINT64_MAX);
    const int64_t k = std::clamp<int64_t>(
        DenseWidthThreshold(spec.w_max, 1.0) - 1, 1, spec.w_max);
    std::vector<int64_t> all(static_cast<size_t>(spec.w_max));
    for (int64_t w = 1; w <= spec.w_max; ++w) all[w - 1] = w;
    // Partial Fisher-Yates shuffle.
    for (int64_t i = 0; i < k; ++i) {
      const int64_t j = UniformInt(rng, i, spec.w_max - 1);
      std::swap(all[i], all[j]);
    }
    palette.assign(all.begin(), all.begin() + k);
  }

  const int64_t w_max =
      spec.family == Family::kWmaxEqN ? spec.n : spec.w_max;
  for (int64_t i = 0; i < spec.n; ++i) {
    CounterRng rng = base.Split(static_cast<uint64_t>(i));
    Item item;
    switch (spec.family) {
      case Family::kUniform:
        item.weight = UniformInt(rng, 1, w_max);
        item.profit = UniformInt(rng, 0, spec.p_max);
        break;
      case Family::kWmaxEqN:
        // The first item pins the maximum weight to exactly n.
        item.weight = i == 0 ? w_max : UniformInt(rng, 1, w_max);
        item.profit = UniformInt(rng, 0, spec.p_max);
        break;
      case Family::kDeltaAdversarial: {
        // Heavy items are marginally more efficient, so the greedy fills up
        // on them and the optimum trades them for light ones.
        const bool heavy = i % 2 == 0;
        const int64_t half = std::max<int64_t>(w_max / 2, 1);
        item.weight = heavy ? UniformInt(rng, half, w_max)
                            : UniformInt(rng, 1, half);
        item.profit = heavy ? 2 * item.weight + 1 : 2 * item.weight;
        break;
      }
      case Family::kDenseWeights:
        item.weight = i < w_max ? i + 1 : UniformInt(rng, 1, w_max);
        item.profit = UniformInt(rng, 0, spec.p_max);
        break;
      case Family::kSparseWeights:
        item.weight = palette[static_cast<size_t>(
            UniformInt(rng, 0, static_cast<int64_t>(palette.size()) - 1))];
        item.profit = UniformInt(rng, 0, spec.p_max);
        break;
    }
    item.multiplicity = UniformInt(rng, 1, spec.u_max);
    items.push_back(item);
  }
  return items;
}

}  // namespace

const char* FamilyName(Family family) {
  for (const FamilyEntry& entry : kFamilies) {
    if (entry.family == family) return entry.name;
  }
  return "unknown";
}

Family ParseFamily(const std::string& name) {
  for (const FamilyEntry& entry : kFamilies) {
    if (name == entry.name) return entry.family;
  }
  throw InvalidInputError("unknown family: " + name);
}

const char* ProblemName(ProblemKind kind) {
  return kind == ProblemKind::kKnapsack ? "knapsack" : "subsetsum";
}

ProblemKind ParseProblem(const std::string& name) {
  if (name == "knapsack") return ProblemKind::kKnapsack;
  if (name == "subsetsum" || name == "subset-sum") {
    return ProblemKind::kSubsetSum;
  }
  throw InvalidInputError("unknown problem: " + name);
}

void GeneratorSpec::Validate() const {
  if (n < 0) throw InvalidInputError("n must be non-negative");
  if (w_max < 1 || u_max < 1 || p_max < 0) {
    throw InvalidInputError("w_max and u_max must be >= 1, p_max >= 0");
  }
  if (fixed_capacity < 0 && !(rho > 0.0 && rho <= 1.0)) {
    throw InvalidInputError("rho must lie in (0, 1]");
  }
  if (family == Family::kDenseWeights && n < w_max) {
    throw InvalidInputError("dense-weights needs n >= w_max");
  }
}

GeneratedInstance Generate(const GeneratorSpec& spec) {
  spec.Validate();
  std::vector<Item> items = DrawItems(spec);
  GeneratedInstance out;
  out.problem = spec.problem;
  int64_t total = 0;
  for (const Item& item : items) total += item.weight * item.multiplicity;
  int64_t capacity = CapacityFor(spec, total);
  if (spec.family == Family::kWmaxEqN && spec.fixed_capacity < 0) {
    capacity = spec.n * spec.n;
  }
  if (spec.problem == ProblemKind::kKnapsack) {
    out.knapsack.items = std::move(items);
    out.knapsack.capacity = capacity;
  } else {
    for (const Item& item : items) {
      out.subset_sum.pairs.push_back({item.weight, item.multiplicity});
    }
    out.subset_sum.target = capacity;
  }
  return out;
}

std::string SpecToJson(const GeneratorSpec& spec) {
  nlohmann::ordered_json j;
  j["problem"] = ProblemName(spec.problem);
  j["family"] = FamilyName(spec.family);
  j["n"] = spec.n;
  j["w_max"] = spec.w_max;
  j["p_max"] = spec.p_max;
  j["u_max"] = spec.u_max;
  j["rho"] = spec.rho;
  j["capacity"] = spec.fixed_capacity;
  j["seed"] = spec.seed;
  return j.dump();
}

GeneratorSpec SpecFromJson(const std::string& text) {
  GeneratorSpec spec;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw ParseError("generator spec must be an object");
    if (j.contains("problem")) {
      spec.problem = ParseProblem(j.at("problem").get<std::string>());
    }
    if (j.contains("family")) {
      spec.family = ParseFamily(j.at("family").get<std::string>());
    }
    if (j.contains("n")) spec.n = j.at("n").get<int64_t>();
    if (j.contains("w_max")) spec.w_max = j.at("w_max").get<int64_t>();
    if (j.contains("p_max")) spec.p_max = j.at("p_max").get<int64_t>();
    if (j.contains("u_max")) spec.u_max = j.at("u_max").get<int64_t>();
    if (j.contains("rho")) spec.rho = j.at("rho").get<double>();
    if (j.contains("capacity")) {
      spec.fixed_capacity = j.at("capacity").get<int64_t>();
    }
    if (j.contains("seed")) spec.seed = j.at("seed").get<uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("generator spec: ") + e.what());
  }
  return spec;
}

}  // namespace proxiknap
