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

// Command-line front end: solve, generate and bench. Exposed as a library so
// the tests can drive it in-process.

#ifndef PROXIKNAP_TOOLS_CLI_H_
#define PROXIKNAP_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "proxiknap/instance_gen.h"
#include "proxiknap/instance_io.h"
#include "proxiknap/sums_backend.h"

namespace proxiknap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

// Algorithm tags accepted by --algo.
const std::vector<std::string>& AlgorithmTags();

struct SolveOptions {
  std::string algo = "knap-125";
  uint64_t seed = 0;
  double c_a = 1.0;
  double c_b = 1.0;
  bool strict = true;  // verified mode for the knapsack tags
  SumsBackend backend = SumsBackend::kAuto;
  bool witness = true;
};

// One run, with enough fields to reproduce it.
struct RunRecord {
  std::string id;      // instance hash
  std::string algo;
  std::string answer;  // optimum for knapsack, true/false for subset sum
  int64_t ns = 0;
  int64_t cells = 0;         // convolution cells over all passes
  int64_t sumset_bytes = 0;  // bytes of sumset bit vectors produced
  uint64_t seed = 0;
  std::string cfg;           // semicolon-separated key=value echo
  std::vector<int64_t> solution;
};

// Throws InvalidInputError for unknown tags or a subset-sum tag on a
// knapsack instance; propagates solver errors.
RunRecord SolveInstance(const InstanceFile& file, const SolveOptions& options);

// The answer the matching oracle gives, in RunRecord::answer form.
std::string OracleAnswer(const InstanceFile& file);

struct BenchFamily {
  GeneratorSpec base;
  std::vector<int64_t> sizes;
  std::string size_field = "both";  // "n", "w_max" or "both"
};

struct BenchSpec {
  std::vector<BenchFamily> families;
  std::vector<std::string> algorithms;
  int64_t repetitions = 1;
  uint64_t seed = 0;
  double c_a = 1.0;
  double c_b = 1.0;
  bool strict = true;
  SumsBackend backend = SumsBackend::kAuto;
};

struct BenchRow {
  std::string family;
  int64_t size = 0;
  RunRecord record;
};

// Throws ParseError on malformed specs.
BenchSpec ParseBenchSpec(const std::string& json);

// Runs every family x size x repetition x algorithm, on `jobs` threads.
// Rows come back in that nested order regardless of scheduling.
std::vector<BenchRow> RunBench(const BenchSpec& spec, int jobs);

// Least-squares slope of log(y) against log(x) over points with x, y > 0.
double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y);

std::string CsvHeader();
std::string CsvRow(const RunRecord& record);
// "# fit family=... algo=... metric=cells slope=..." lines per
// (family, algorithm), from the mean counter per size.
std::vector<std::string> FitLines(const std::vector<BenchRow>& rows);

// Entry point; args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace proxiknap::cli

#endif  // PROXIKNAP_TOOLS_CLI_H_
