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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "proxiknap/errors.h"
#include "proxiknap/knapsack_solver.h"
#include "proxiknap/oracle.h"
#include "proxiknap/rng.h"
#include "proxiknap/subset_sum.h"
#include "proxiknap/sumset.h"

namespace proxiknap::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string FormatDouble(double value) {
  std::ostringstream out;
  out << std::setprecision(6) << value;
  return out.str();
}

SumsBackend ParseBackend(const std::string& name) {
  if (name == "auto") return SumsBackend::kAuto;
  if (name == "exact") return SumsBackend::kExact;
  if (name == "randomized") return SumsBackend::kRandomized;
  throw InvalidInputError("unknown backend: " + name);
}

bool IsKnapsackTag(const std::string& tag) { return tag.rfind("knap-", 0) == 0; }

PartitionScheme SchemeForTag(const std::string& tag) {
  if (tag == "knap-baseline") return PartitionScheme::kBaseline;
  if (tag == "knap-52") return PartitionScheme::kTwoWay;
  if (tag == "knap-125") return PartitionScheme::kThreeWay;
  throw InvalidInputError("unknown knapsack algorithm: " + tag);
}

SubsetSumConfig::Algo AlgoForTag(const std::string& tag) {
  if (tag == "ss-nw") return SubsetSumConfig::Algo::kNw;
  if (tag == "ss-dense") return SubsetSumConfig::Algo::kDense;
  if (tag == "ss-auto") return SubsetSumConfig::Algo::kAuto;
  throw InvalidInputError("unknown subset-sum algorithm: " + tag);
}

std::string ConfigEcho(const SolveOptions& options) {
  return "cA=" + FormatDouble(options.c_a) + ";cB=" +
         FormatDouble(options.c_b) + ";strict=" +
         (options.strict ? "1" : "0") + ";backend=" +
         BackendName(options.backend);
}

Json RecordJson(const RunRecord& record) {
  Json j;
  j["id"] = record.id;
  j["algo"] = record.algo;
  j["answer"] = record.answer;
  j["ns"] = record.ns;
  j["cells"] = record.cells;
  j["sumset_bytes"] = record.sumset_bytes;
  j["seed"] = record.seed;
  j["cfg"] = record.cfg;
  if (!record.solution.empty()) j["solution"] = record.solution;
  return j;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Maps an exception from a command to an exit code and message.
int ExitCodeFor(const std::exception_ptr& error, std::string* message) {
  try {
    std::rethrow_exception(error);
  } catch (const ResourceLimitError& e) {
    *message = e.what();
    return kExitResource;
  } catch (const InvalidInputError& e) {
    *message = e.what();
    return kExitInput;
  } catch (const IoError& e) {
    *message = e.what();
    return kExitInput;
  } catch (const std::bad_alloc&) {
    *message = "out of memory";
    return kExitResource;
  } catch (const std::exception& e) {
    *message = e.what();
    return kExitInput;
  }
}

void ReportError(bool json, int code, const std::string& message,
                 std::ostream& out, std::ostream& err) {
  if (json) {
    Json j;
    j["error"] = message;
    j["exit"] = code;
    out << j.dump() << '\n';
  } else {
    err << "error: " << message << '\n';
  }
}

}  // namespace

const std::vector<std::string>& AlgorithmTags() {
  static const std::vector<std::string> kTags = {
      "knap-baseline", "knap-52", "knap-125", "ss-nw",
      "ss-dense",      "ss-auto", "oracle-dp"};
  return kTags;
}

RunRecord SolveInstance(const InstanceFile& file, const SolveOptions& options) {
  RunRecord record;
  record.id = InstanceHash(file);
  record.algo = options.algo;
  record.seed = options.seed;
  record.cfg = ConfigEcho(options);
  ResetSumsetBytes();
  const auto start = std::chrono::steady_clock::now();
  if (IsKnapsackTag(options.algo)) {
    const KnapsackInstance instance = file.problem == ProblemKind::kKnapsack
                                          ? file.knapsack
                                          : AsKnapsack(file.subset_sum);
    SolverConfig config;
    config.scheme = SchemeForTag(options.algo);
    config.c_a = options.c_a;
    config.c_b = options.c_b;
    config.verified = options.strict;
    config.witness = options.witness;
    SolveStats stats;
    const OptResult result = SolveKnapsack(instance, config, &stats);
    record.answer = std::to_string(result.value);
    record.cells = stats.cells;
    record.solution = result.solution;
  } else if (options.algo == "oracle-dp") {
    record.answer = OracleAnswer(file);
  } else {
    const SubsetSumConfig::Algo algo = AlgoForTag(options.algo);
    if (file.problem != ProblemKind::kSubsetSum) {
      throw InvalidInputError(options.algo + " needs a SUBSETSUM instance");
    }
    SubsetSumConfig config;
    config.algo = algo;
    config.c_a = options.c_a;
    config.c_b = options.c_b;
    config.backend = options.backend;
    CounterRng rng(options.seed);
    record.answer =
        SolveSubsetSum(file.subset_sum, config, rng) ? "true" : "false";
  }
  record.ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  record.sumset_bytes = SumsetBytes();
  return record;
}

std::string OracleAnswer(const InstanceFile& file) {
  if (file.problem == ProblemKind::kKnapsack) {
    ValidateKnapsack(file.knapsack);
    return std::to_string(DpKnapsack(file.knapsack).value);
  }
  const SubsetSumInstance instance = NormalizeSubsetSum(
      file.subset_sum.pairs, std::max<int64_t>(file.subset_sum.target, 0));
  if (file.subset_sum.target < 0 ||
      file.subset_sum.target > instance.TotalWeight()) {
    return "false";
  }
  const double cells = static_cast<double>(instance.pairs.size()) *
                       static_cast<double>(instance.target + 1);
  if (cells > static_cast<double>(OracleCellCap())) {
    throw ResourceLimitError("subset-sum oracle exceeds cell cap");
  }
  return DpSumsUpto(instance.pairs, instance.target).Contains(instance.target)
             ? "true"
             : "false";
}

BenchSpec ParseBenchSpec(const std::string& text) {
  BenchSpec spec;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    for (const nlohmann::json& f : j.at("families")) {
      BenchFamily family;
      nlohmann::json base = f;
      base.erase("sizes");
      base.erase("size_field");
      family.base = SpecFromJson(base.dump());
      family.sizes = f.at("sizes").get<std::vector<int64_t>>();
      family.size_field = f.value("size_field", std::string("both"));
      if (family.size_field != "n" && family.size_field != "w_max" &&
          family.size_field != "both") {
        throw ParseError("size_field must be n, w_max or both");
      }
      spec.families.push_back(std::move(family));
    }
    spec.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    for (const std::string& tag : spec.algorithms) {
      const auto& tags = AlgorithmTags();
      if (std::find(tags.begin(), tags.end(), tag) == tags.end()) {
        throw ParseError("unknown algorithm tag: " + tag);
      }
    }
    spec.repetitions = j.value("repetitions", int64_t{1});
    if (spec.repetitions < 0) throw ParseError("repetitions must be >= 0");
    spec.seed = j.value("seed", uint64_t{0});
    spec.c_a = j.value("cA", 1.0);
    spec.c_b = j.value("cB", 1.0);
    spec.strict = j.value("strict", true);
    spec.backend = ParseBackend(j.value("backend", std::string("auto")));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bench spec: ") + e.what());
  }
  return spec;
}

std::vector<BenchRow> RunBench(const BenchSpec& spec, int jobs) {
  struct Task {
    size_t family;
    int64_t size;
    int64_t rep;
    std::string algo;
  };
  std::vector<Task> tasks;
  for (size_t f = 0; f < spec.families.size(); ++f) {
    for (int64_t size : spec.families[f].sizes) {
      for (int64_t rep = 0; rep < spec.repetitions; ++rep) {
        for (const std::string& algo : spec.algorithms) {
          tasks.push_back({f, size, rep, algo});
        }
      }
    }
  }
  std::vector<BenchRow> rows(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      const BenchFamily& family = spec.families[task.family];
      GeneratorSpec gen = family.base;
      if (family.size_field != "w_max") gen.n = task.size;
      if (family.size_field != "n") gen.w_max = task.size;
      gen.seed = spec.seed + static_cast<uint64_t>(task.rep);
      BenchRow& row = rows[i];
      row.family = FamilyName(gen.family);
      row.size = task.size;
      SolveOptions options;
      options.algo = task.algo;
      options.seed = gen.seed;
      options.c_a = spec.c_a;
      options.c_b = spec.c_b;
      options.strict = spec.strict;
      options.backend = spec.backend;
      options.witness = false;
      try {
        const GeneratedInstance generated = Generate(gen);
        InstanceFile file;
        file.problem = generated.problem;
        file.knapsack = generated.knapsack;
        file.subset_sum = generated.subset_sum;
        row.record = SolveInstance(file, options);
      } catch (const std::exception& e) {
        row.record.algo = task.algo;
        row.record.seed = gen.seed;
        row.record.answer = std::string("error: ") + e.what();
      }
      row.record.cfg = "family=" + row.family + ";n=" + std::to_string(gen.n) +
                       ";w_max=" + std::to_string(gen.w_max) + ";" +
                       ConfigEcho(options);
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& thread : pool) thread.join();
  return rows;
}

double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  const double denom = count * sxx - sx * sx;
  if (count < 2 || denom == 0) return std::nan("");
  return (count * sxy - sx * sy) / denom;
}

std::string CsvHeader() { return "id,algo,answer,ns,cells,sumset_bytes,seed,cfg"; }

std::string CsvRow(const RunRecord& r) {
  std::string answer = r.answer;
  std::replace(answer.begin(), answer.end(), ',', ';');
  return r.id + "," + r.algo + "," + answer + "," + std::to_string(r.ns) +
         "," + std::to_string(r.cells) + "," + std::to_string(r.sumset_bytes) +
         "," + std::to_string(r.seed) + "," + r.cfg;
}

std::vector<std::string> FitLines(const std::vector<BenchRow>& rows) {
  // (family, algo) -> size -> sums of (cells, sumset_bytes, ns) and count.
  struct Acc {
    double cells = 0, bytes = 0, ns = 0;
    int count = 0;
  };
  std::vector<std::pair<std::string, std::string>> keys;
  std::map<std::pair<std::string, std::string>, std::map<int64_t, Acc>> acc;
  for (const BenchRow& row : rows) {
    const auto key = std::make_pair(row.family, row.record.algo);
    if (!acc.contains(key)) keys.push_back(key);
    Acc& a = acc[key][row.size];
    a.cells += static_cast<double>(row.record.cells);
    a.bytes += static_cast<double>(row.record.sumset_bytes);
    a.ns += static_cast<double>(row.record.ns);
    ++a.count;
  }
  std::vector<std::string> lines;
  for (const auto& key : keys) {
    std::vector<double> sizes, cells, bytes, ns;
    for (const auto& [size, a] : acc[key]) {
      sizes.push_back(static_cast<double>(size));
      cells.push_back(a.cells / a.count);
      bytes.push_back(a.bytes / a.count);
      ns.push_back(a.ns / a.count);
    }
    const std::string prefix =
        "# fit family=" + key.first + " algo=" + key.second + " metric=";
    const std::pair<const char*, const std::vector<double>*> metrics[] = {
        {"cells", &cells}, {"sumset_bytes", &bytes}, {"ns", &ns}};
    for (const auto& [name, values] : metrics) {
      const double slope = LogLogSlope(sizes, *values);
      if (std::isnan(slope)) continue;
      lines.push_back(prefix + name + " slope=" + FormatDouble(slope));
    }
  }
  return lines;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Bounded Knapsack and Subset Sum solvers", "proxiknap"};
  app.require_subcommand(1);

  // solve
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
  std::string solve_path;
  SolveOptions options;
  std::string backend = "auto";
  bool verify = false;
  bool json = false;
  bool no_strict = false;
  solve->add_option("path", solve_path, "Instance file (.json for JSON)")
      ->required();
  solve->add_option("--algo", options.algo, "Algorithm tag")
      ->check(CLI::IsMember(AlgorithmTags()));
  solve->add_flag("--verify", verify, "Compare against the oracle");
  solve->add_option("--seed", options.seed, "Random seed");
  solve->add_option("--cA", options.c_a, "Partition constant c_A")
      ->check(CLI::PositiveNumber);
  solve->add_option("--cB", options.c_b, "Partition constant c_B")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--strict", options.strict, "Verified mode (default on)");
  solve->add_flag("--no-strict", no_strict, "Single pass with computed bounds");
  solve->add_option("--backend", backend, "auto, exact or randomized")
      ->check(CLI::IsMember({"auto", "exact", "randomized"}));
  solve->add_flag("--json", json, "Emit a JSON record");

  // generate
  CLI::App* generate = app.add_subcommand("generate", "Write an instance");
  GeneratorSpec gen;
  std::string family = "uniform", problem = "knapsack", spec_path, out_path;
  generate->add_option("--spec", spec_path, "JSON generator spec file");
  generate->add_option("--family", family, "Instance family");
  generate->add_option("--problem", problem, "knapsack or subsetsum");
  generate->add_option("--n", gen.n, "Number of items");
  generate->add_option("--wmax", gen.w_max, "Maximum weight");
  generate->add_option("--pmax", gen.p_max, "Maximum profit");
  generate->add_option("--umax", gen.u_max, "Maximum multiplicity");
  generate->add_option("--rho", gen.rho, "Capacity as a fraction of total");
  generate->add_option("--capacity", gen.fixed_capacity, "Fixed capacity");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("-o,--out", out_path, "Output path (stdout if absent)");

  // bench
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark spec");
  std::string bench_path, bench_out;
  bool fit = false;
  int jobs = 1;
  bench->add_option("spec", bench_path, "JSON benchmark spec")->required();
  bench->add_flag("--fit", fit, "Append log-log slope fits");
  bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("-o,--out", bench_out, "CSV path (stdout if absent)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const bool wants_json =
        std::find(args.begin(), args.end(), "--json") != args.end();
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    ReportError(wants_json, kExitInput, e.what(), out, err);
    if (!wants_json) err << app.help();
    return kExitInput;
  }

  if (*solve) {
    if (no_strict) options.strict = false;
    try {
      options.backend = ParseBackend(backend);
      const InstanceFile file = ReadInstanceFile(solve_path);
      const RunRecord record = SolveInstance(file, options);
      int code = kExitOk;
      std::string verdict;
      std::string oracle;
      if (verify) {
        // Knapsack tags are checked as knapsacks, also on SUBSETSUM files.
        InstanceFile reference = file;
        if (IsKnapsackTag(options.algo)) {
          reference.knapsack = file.problem == ProblemKind::kKnapsack
                                   ? file.knapsack
                                   : AsKnapsack(file.subset_sum);
          reference.problem = ProblemKind::kKnapsack;
        }
        oracle = OracleAnswer(reference);
        bool match = oracle == record.answer;
        if (match && IsKnapsackTag(options.algo)) {
          match = IsFeasibleWitness(
              reference.knapsack, {std::stoll(record.answer), record.solution});
        }
        verdict = match ? "match" : "mismatch";
        if (!match) code = kExitMismatch;
      }
      if (json) {
        Json j = RecordJson(record);
        if (verify) {
          j["oracle"] = oracle;
          j["verify"] = verdict;
        }
        out << j.dump() << '\n';
      } else {
        out << "id=" << record.id << " algo=" << record.algo
            << " answer=" << record.answer << " ns=" << record.ns
            << " cells=" << record.cells
            << " sumset_bytes=" << record.sumset_bytes
            << " seed=" << record.seed << " cfg=" << record.cfg;
        if (verify) out << " oracle=" << oracle << " verify=" << verdict;
        out << '\n';
      }
      return code;
    } catch (...) {
      std::string message;
      const int code = ExitCodeFor(std::current_exception(), &message);
      ReportError(json, code, message, out, err);
      return code;
    }
  }

  if (*generate) {
    try {
      if (!spec_path.empty()) {
        gen = SpecFromJson(ReadText(spec_path));
      } else {
        gen.family = ParseFamily(family);
        gen.problem = ParseProblem(problem);
      }
      const GeneratedInstance generated = Generate(gen);
      InstanceFile file;
      file.problem = generated.problem;
      file.knapsack = generated.knapsack;
      file.subset_sum = generated.subset_sum;
      file.generator = SpecToJson(gen);
      if (out_path.empty()) {
        out << FormatInstanceText(file);
      } else {
        WriteInstanceFile(out_path, file);
      }
      return kExitOk;
    } catch (...) {
      std::string message;
      const int code = ExitCodeFor(std::current_exception(), &message);
      ReportError(false, code, message, out, err);
      return code;
    }
  }

  if (*bench) {
    try {
      const BenchSpec spec = ParseBenchSpec(ReadText(bench_path));
      const std::vector<BenchRow> rows = RunBench(spec, jobs);
      std::ostringstream csv;
      csv << CsvHeader() << '\n';
      for (const BenchRow& row : rows) csv << CsvRow(row.record) << '\n';
      if (fit) {
        for (const std::string& line : FitLines(rows)) csv << line << '\n';
      }
      if (bench_out.empty()) {
        out << csv.str();
      } else {
        std::ofstream file(bench_out, std::ios::trunc);
        if (!file) throw IoError("cannot open " + bench_out);
        file << csv.str();
      }
      bool failed = false;
      for (const BenchRow& row : rows) {
        if (row.record.answer.rfind("error:", 0) == 0) failed = true;
      }
      return failed ? kExitResource : kExitOk;
    } catch (...) {
      std::string message;
      const int code = ExitCodeFor(std::current_exception(), &message);
      ReportError(false, code, message, out, err);
      return code;
    }
  }
  return kExitInput;
}

}  // namespace proxiknap::cli
