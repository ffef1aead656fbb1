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

#include "proxiknap/instance_io.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "proxiknap/errors.h"

namespace proxiknap {
namespace {

constexpr char kGeneratorPrefix[] = "# generator:";

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<int64_t> ParseIntegers(const std::string& line, size_t line_no) {
  std::istringstream in(line);
  std::vector<int64_t> values;
  std::string token;
  while (in >> token) {
    size_t used = 0;
    int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.empty()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected an integer, got '" + token + "'");
    }
    values.push_back(value);
  }
  return values;
}

std::string Body(const InstanceFile& file) {
  std::ostringstream out;
  if (file.problem == ProblemKind::kKnapsack) {
    out << "KNAPSACK " << file.knapsack.items.size() << ' '
        << file.knapsack.capacity << '\n';
    for (const Item& item : file.knapsack.items) {
      out << item.weight << ' ' << item.profit << ' ' << item.multiplicity
          << '\n';
    }
  } else {
    out << "SUBSETSUM " << file.subset_sum.pairs.size() << ' '
        << file.subset_sum.target << '\n';
    for (const WeightCount& pair : file.subset_sum.pairs) {
      out << pair.weight << ' ' << pair.multiplicity << '\n';
    }
  }
  return out.str();
}

}  // namespace

InstanceFile ParseInstanceText(const std::string& text) {
  InstanceFile file;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  bool have_header = false;
  int64_t expected = 0;
  int64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (line.compare(first, sizeof(kGeneratorPrefix) - 1,
                       kGeneratorPrefix) == 0) {
        file.generator = line.substr(first + sizeof(kGeneratorPrefix) - 1);
        const size_t start = file.generator->find_first_not_of(' ');
        file.generator = start == std::string::npos
                             ? std::string()
                             : file.generator->substr(start);
      }
      continue;
    }
    if (!have_header) {
      std::istringstream header(line);
      std::string tag;
      header >> tag;
      if (tag == "KNAPSACK") {
        file.problem = ProblemKind::kKnapsack;
      } else if (tag == "SUBSETSUM") {
        file.problem = ProblemKind::kSubsetSum;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected KNAPSACK or SUBSETSUM header");
      }
      std::string rest;
      std::getline(header, rest);
      const std::vector<int64_t> values = ParseIntegers(rest, line_no);
      if (values.size() != 2 || values[0] < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": header needs n >= 0 and t");
      }
      expected = values[0];
      if (file.problem == ProblemKind::kKnapsack) {
        file.knapsack.capacity = values[1];
      } else {
        file.subset_sum.target = values[1];
      }
      have_header = true;
      continue;
    }
    const std::vector<int64_t> values = ParseIntegers(line, line_no);
    if (seen >= expected) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": more item lines than declared");
    }
    if (file.problem == ProblemKind::kKnapsack) {
      if (values.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'w p u'");
      }
      file.knapsack.items.push_back({values[0], values[1], values[2]});
    } else {
      if (values.size() != 2) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'w u'");
      }
      file.subset_sum.pairs.push_back({values[0], values[1]});
    }
    ++seen;
  }
  if (!have_header) throw ParseError("missing KNAPSACK/SUBSETSUM header");
  if (seen != expected) {
    throw ParseError("declared " + std::to_string(expected) +
                     " items, found " + std::to_string(seen));
  }
  return file;
}

InstanceFile ParseInstanceJson(const std::string& text) {
  InstanceFile file;
  try {
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    const std::string problem = j.at("problem").get<std::string>();
    if (problem == "knapsack") {
      file.problem = ProblemKind::kKnapsack;
    } else if (problem == "subsetsum" || problem == "subset-sum") {
      file.problem = ProblemKind::kSubsetSum;
    } else {
      throw ParseError("unknown problem '" + problem + "'");
    }
    const int64_t t = j.at("t").get<int64_t>();
    const nlohmann::ordered_json& items = j.at("items");
    if (!items.is_array()) throw ParseError("'items' must be an array");
    for (const nlohmann::ordered_json& entry : items) {
      // Accepts {"w":..,"p":..,"u":..} objects or [w, p, u] arrays.
      const bool knap = file.problem == ProblemKind::kKnapsack;
      int64_t w = 0, p = 0, u = 0;
      if (entry.is_object()) {
        w = entry.at("w").get<int64_t>();
        if (knap) p = entry.at("p").get<int64_t>();
        u = entry.at("u").get<int64_t>();
      } else if (entry.is_array() && entry.size() == (knap ? 3u : 2u)) {
        w = entry[0].get<int64_t>();
        if (knap) p = entry[1].get<int64_t>();
        u = entry[knap ? 2 : 1].get<int64_t>();
      } else {
        throw ParseError("malformed item entry");
      }
      if (knap) {
        file.knapsack.items.push_back({w, p, u});
      } else {
        file.subset_sum.pairs.push_back({w, u});
      }
    }
    if (j.contains("n") && j.at("n").get<int64_t>() !=
                               static_cast<int64_t>(items.size())) {
      throw ParseError("'n' does not match the number of items");
    }
    if (file.problem == ProblemKind::kKnapsack) {
      file.knapsack.capacity = t;
    } else {
      file.subset_sum.target = t;
    }
    if (j.contains("generator") && !j.at("generator").is_null()) {
      file.generator = j.at("generator").dump();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json instance: ") + e.what());
  }
  return file;
}

std::string FormatInstanceText(const InstanceFile& file) {
  std::string out;
  if (file.generator.has_value()) {
    out += std::string(kGeneratorPrefix) + ' ' + *file.generator + '\n';
  }
  return out + Body(file);
}

std::string FormatInstanceJson(const InstanceFile& file) {
  nlohmann::ordered_json j;
  j["problem"] = ProblemName(file.problem);
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  if (file.problem == ProblemKind::kKnapsack) {
    j["n"] = file.knapsack.items.size();
    j["t"] = file.knapsack.capacity;
    for (const Item& item : file.knapsack.items) {
      items.push_back(
          {{"w", item.weight}, {"p", item.profit}, {"u", item.multiplicity}});
    }
  } else {
    j["n"] = file.subset_sum.pairs.size();
    j["t"] = file.subset_sum.target;
    for (const WeightCount& pair : file.subset_sum.pairs) {
      items.push_back({{"w", pair.weight}, {"u", pair.multiplicity}});
    }
  }
  j["items"] = std::move(items);
  if (file.generator.has_value()) {
    j["generator"] = nlohmann::ordered_json::parse(*file.generator);
  }
  return j.dump(2) + "\n";
}

InstanceFile ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return EndsWith(path, ".json") ? ParseInstanceJson(buffer.str())
                                 : ParseInstanceText(buffer.str());
}

void WriteInstanceFile(const std::string& path, const InstanceFile& file) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << (EndsWith(path, ".json") ? FormatInstanceJson(file)
                                  : FormatInstanceText(file));
  if (!out) throw IoError("cannot write " + path);
}

std::string InstanceHash(const InstanceFile& file) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : Body(file)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = kHex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace proxiknap
