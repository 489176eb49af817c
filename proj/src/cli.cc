// Copyright 2026 The ksub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ksub/cli.h"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ksub/bench.h"
#include "ksub/checkers.h"
#include "ksub/errors.h"
#include "ksub/instance.h"
#include "ksub/maximizers.h"
#include "ksub/report.h"
#include "ksub/zoo.h"

namespace ksub {
namespace {

struct CommonOptions {
  std::string instance_path;
  double eps = kDefaultEps;
  std::optional<std::uint64_t> max_states;
  std::optional<std::uint64_t> max_pairs;
};

struct MaximizeOptions {
  std::string algo;
  bool exact = false;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string order;
  bool orthants_only = false;
};

std::string ReadInstanceText(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Limits ResolveLimits(const CommonOptions& options) {
  Limits limits;
  if (const char* env = std::getenv("KSUB_MAX_STATES"); env != nullptr) {
    const std::string_view text = env;
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      throw InputError("KSUB_MAX_STATES must be a nonnegative integer");
    }
    limits.max_states = value;
  }
  if (options.max_states) limits.max_states = *options.max_states;
  if (options.max_pairs) limits.max_pairs = *options.max_pairs;
  return limits;
}

void AddCommonOptions(CLI::App& command, CommonOptions& options,
                      bool needs_instance) {
  if (needs_instance) {
    command.add_option("instance", options.instance_path,
                       "Instance JSON file, or - for stdin")
        ->required();
  }
  command.add_option("--eps", options.eps, "Comparison tolerance")
      ->capture_default_str();
  command.add_option("--max-states", options.max_states,
                     "Cap on enumerated assignments (default 1e6, env "
                     "KSUB_MAX_STATES)");
  command.add_option("--max-pairs", options.max_pairs,
                     "Cap on checker comparisons (default 1e8)");
}

int RunCheck(const CommonOptions& common, const std::string& property,
             std::ostream& out) {
  const Limits limits = ResolveLimits(common);
  const OraclePtr f = BuildOracle(ParseInstance(ReadInstanceText(common.instance_path)));
  const TablePtr table = Tabulate(*f, limits);

  CheckReport report;
  if (property == "ksub") {
    report = CheckKSubmodular(*table, common.eps, limits);
  } else if (property == "orthant") {
    report = CheckOrthantSubmodular(*table, common.eps, limits);
  } else if (property == "pairwise") {
    report = CheckRWiseMonotone(*table, 2, common.eps, limits);
  } else if (property.rfind("monotone:", 0) == 0) {
    const std::string digits = property.substr(9);
    int r = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size()) {
      throw InputError("bad property '" + property + "', expected monotone:R");
    }
    report = CheckRWiseMonotone(*table, r, common.eps, limits);
  } else if (property == "characterization") {
    report = CheckCharacterization(*table, common.eps, limits);
  } else if (property == "orthant-pair") {
    report = CheckOrthantPairInequality(*table, common.eps, limits);
  } else {
    throw InputError("unknown property '" + property +
                     "', expected ksub, orthant, pairwise, monotone:R, "
                     "characterization or orthant-pair");
  }
  out << ToJson(report).dump(2) << '\n';
  return report.holds ? kExitOk : kExitViolation;
}

int RunMaximize(const CommonOptions& common, const MaximizeOptions& options,
                std::ostream& out) {
  const Limits limits = ResolveLimits(common);
  const OraclePtr f = BuildOracle(ParseInstance(ReadInstanceText(common.instance_path)));
  const ElementOrder order =
      options.order.empty() ? ElementOrder{} : ParseOrder(options.order);
  ValidateOrder(order, f->n());
  const bool randomized = options.algo == "random" || options.algo == "greedy-rand";
  if (options.exact && !randomized) {
    throw InputError("--exact applies to --algo random or greedy-rand only");
  }
  if (options.trials < 0) throw InputError("--trials must be >= 0");

  Json result;
  if (options.exact) {
    const std::uint64_t before = f->calls();
    const double expectation =
        options.algo == "random"
            ? ExactExpectationRandomOrthant(*f, limits)
            : ExactExpectationRandomizedGreedy(*f, order, common.eps, limits);
    result["algorithm"] = options.algo;
    result["exact"] = true;
    result["expectation"] = expectation;
    result["evals"] = f->calls() - before;
  } else if (randomized && options.trials > 0) {
    const EmpiricalEstimate estimate = EmpiricalExpectation(
        *f,
        options.algo == "random" ? RandomAlgorithm::kRandomOrthant
                                 : RandomAlgorithm::kRandomizedGreedy,
        options.trials, RngSeed{options.seed}, order, common.eps);
    result["algorithm"] = options.algo;
    result["exact"] = false;
    result["mean"] = estimate.mean;
    result["stderr"] =
        estimate.std_error ? Json(*estimate.std_error) : Json(nullptr);
    result["trials"] = estimate.trials;
    result["seed"] = options.seed;
  } else if (options.algo == "brute") {
    result = ToJson(BruteForceMax(*f, options.orthants_only, limits));
  } else if (options.algo == "random") {
    result = ToJson(NaiveRandomSample(*f, RngSeed{options.seed}));
  } else if (options.algo == "greedy-det") {
    result = ToJson(DeterministicGreedy(*f, order, common.eps));
  } else if (options.algo == "greedy-rand") {
    result = ToJson(RandomizedGreedy(*f, RngSeed{options.seed}, order, common.eps));
  } else {
    throw InputError("unknown algorithm '" + options.algo +
                     "', expected brute, random, greedy-det or greedy-rand");
  }
  out << result.dump(2) << '\n';
  return kExitOk;
}

std::filesystem::path CsvTwin(const std::filesystem::path& json_path) {
  std::filesystem::path csv = json_path;
  csv.replace_extension(".csv");
  if (csv == json_path) csv += ".csv";
  return csv;
}

int RunBenchCommand(const CommonOptions& common, BenchOptions options,
                    const std::string& k_range, const std::string& r_range,
                    const std::string& out_path, std::ostream& out) {
  options.eps = common.eps;
  options.limits = ResolveLimits(common);
  options.k = ParseRange(k_range);
  if (!r_range.empty()) options.r = ParseRange(r_range);
  const BenchReport report = RunBench(options);

  const std::filesystem::path json_path = out_path;
  const std::filesystem::path csv_path = CsvTwin(json_path);
  {
    std::ofstream file(json_path);
    file << ToJson(report).dump(2) << '\n';
    if (!file) throw InputError("cannot write '" + json_path.string() + "'");
  }
  {
    std::ofstream file(csv_path);
    file << ToCsv(report);
    if (!file) throw InputError("cannot write '" + csv_path.string() + "'");
  }

  Json summary;
  summary["suite"] = report.suite;
  summary["out"] = json_path.string();
  summary["csv"] = csv_path.string();
  summary["rows"] = report.rows.size();
  summary["all_bounds_satisfied"] = report.AllBoundsSatisfied();
  out << summary.dump(2) << '\n';
  return report.AllBoundsSatisfied() ? kExitOk : kExitViolation;
}

int ReportError(const std::string& kind, const std::string& message,
                std::ostream& out, std::ostream& err) {
  err << "ksub: " << message << '\n';
  Json error;
  error["error"] = kind;
  error["message"] = message;
  out << error.dump(2) << '\n';
  return kExitInputError;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Maximize and verify k-submodular functions", "ksub"};
  app.require_subcommand(1);

  CommonOptions check_common;
  std::string property;
  CLI::App* check = app.add_subcommand("check", "Verify a structural property");
  AddCommonOptions(*check, check_common, true);
  check->add_option("--property", property,
                    "ksub | orthant | pairwise | monotone:R | "
                    "characterization | orthant-pair")
      ->required();

  CommonOptions max_common;
  MaximizeOptions max_options;
  CLI::App* maximize = app.add_subcommand("maximize", "Run a maximizer");
  AddCommonOptions(*maximize, max_common, true);
  maximize
      ->add_option("--algo", max_options.algo,
                   "brute | random | greedy-det | greedy-rand")
      ->required();
  maximize->add_flag("--exact", max_options.exact,
                     "Print the exact expectation (random, greedy-rand)");
  maximize->add_option("--seed", max_options.seed, "RNG seed");
  maximize->add_option("--trials", max_options.trials,
                       "Empirical expectation over this many runs");
  maximize->add_option("--order", max_options.order,
                       "Element order, comma separated");
  maximize->add_flag("--orthants-only", max_options.orthants_only,
                     "Brute force over orthants only");

  CommonOptions exp_common;
  MaximizeOptions exp_options;
  exp_options.exact = true;
  CLI::App* expectation = app.add_subcommand(
      "expectation", "Exact expectation of a randomized algorithm");
  AddCommonOptions(*expectation, exp_common, true);
  expectation->add_option("--algo", exp_options.algo, "random | greedy-rand")
      ->required();
  expectation->add_option("--order", exp_options.order,
                          "Element order, comma separated");

  CommonOptions bench_common;
  BenchOptions bench_options;
  std::string k_range;
  std::string r_range;
  std::string out_path;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark suite");
  AddCommonOptions(*bench, bench_common, false);
  bench->add_option("--suite", bench_options.suite, "paper-tight | random-ksub")
      ->required();
  bench->add_option("--k", k_range, "k range, e.g. 2..6")->required();
  bench->add_option("--r", r_range, "r range (default 1..k)");
  bench->add_option("--trials", bench_options.trials,
                    "Runs per empirical row (0 disables them)");
  bench->add_option("--seed", bench_options.seed, "Base seed");
  bench->add_option("--n", bench_options.n, "Ground set size (random-ksub)")
      ->capture_default_str();
  bench->add_option("--instances", bench_options.instances,
                    "Instances per k (random-ksub)")
      ->capture_default_str();
  bench->add_option("--out", out_path, "Report path; a .csv twin is written too")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return ReportError("usage_error", e.what(), out, err);
  }

  try {
    if (check->parsed()) return RunCheck(check_common, property, out);
    if (maximize->parsed()) return RunMaximize(max_common, max_options, out);
    if (expectation->parsed()) {
      return RunMaximize(exp_common, exp_options, out);
    }
    return RunBenchCommand(bench_common, bench_options, k_range, r_range,
                           out_path, out);
  } catch (const RangeViolation& e) {
    return ReportError("oracle_range_violation", e.what(), out, err);
  } catch (const PreconditionError& e) {
    return ReportError("precondition_violation", e.what(), out, err);
  } catch (const InputError& e) {
    return ReportError("input_error", e.what(), out, err);
  }
}

}  // namespace ksub
