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

#include "ksub/bench.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>

#include "ksub/errors.h"
#include "ksub/maximizers.h"
#include "ksub/zoo.h"

namespace ksub {

double RandomOrthantBound(int k) {
  if (k < 2) throw InputError("random orthant bound needs k >= 2");
  return k == 2 ? 0.25 : 1.0 / k;
}

double DeterministicGreedyBound(int r) { return 1.0 / (1.0 + r); }

double RandomizedGreedyKWiseBound(int k) {
  return 1.0 / (1.0 + std::sqrt(k / 2.0));
}

double RandomizedGreedyKSubmodularBound(int k) {
  return 1.0 / (1.0 + std::max(1.0, std::sqrt((k - 1.0) / 4.0)));
}

bool BenchReport::AllBoundsSatisfied() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BenchRow& row) { return row.bound_satisfied; });
}

IntRange ParseRange(const std::string& text) {
  auto parse_int = [&](std::string_view token) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw InputError("bad range '" + text + "', expected LO..HI or N");
    }
    return value;
  };
  const std::string_view view = text;
  const size_t dots = view.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(view);
    return IntRange{v, v};
  }
  return IntRange{parse_int(view.substr(0, dots)),
                  parse_int(view.substr(dots + 2))};
}

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void Finish(BenchRow& row, double eps) {
  row.ratio = row.opt > 0.0 ? row.value / row.opt : 1.0;
  row.bound_satisfied = row.ratio >= row.bound - eps;
}

std::uint64_t EvalBudget(int k, int n) {
  return 2ULL * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n);
}

void TightExampleRows(int k, const BenchOptions& options,
                    std::vector<BenchRow>& rows) {
  const double eps = options.eps;

  // Naive random: the layering edge for k = 2, the indicator for k >= 3.
  {
    const OraclePtr f =
        k == 2 ? MakeLayerLayout(GraphInstance{2, {Edge{0, 1, 1.0}}, true}, 2)
               : MakeIndicator(k, 1);
    BenchRow row;
    row.instance = k == 2 ? "layer_layout_edge" : "indicator";
    row.k = k;
    row.algorithm = "random-exact";
    row.guarantee = "random_orthant";
    row.value = ExactExpectationRandomOrthant(*f, options.limits);
    row.opt = BruteForceMax(*f, false, options.limits).value;
    row.bound = RandomOrthantBound(k);
    Finish(row, eps);
    rows.push_back(std::move(row));
  }

  const IntRange r_range = options.r.value_or(IntRange{1, k});
  for (int r = std::max(1, r_range.lo); r <= std::min(k, r_range.hi); ++r) {
    const OraclePtr f = MakeDetGreedyTight(k, r);
    const MaximizeResult greedy = DeterministicGreedy(*f, {0, 1}, eps);
    BenchRow row;
    row.instance = "det_greedy_tight";
    row.k = k;
    row.r = r;
    row.algorithm = "greedy-det";
    row.guarantee = "greedy_det_r_wise";
    row.value = greedy.value;
    row.opt = BruteForceMax(*f, false, options.limits).value;
    row.bound = DeterministicGreedyBound(r);
    row.evals = greedy.evals;
    row.eval_budget = EvalBudget(k, f->n());
    Finish(row, eps);
    rows.push_back(std::move(row));
  }

  const auto coverage = MakeCoverageTight(k);
  const double expectation =
      ExactExpectationRandomizedGreedy(*coverage, {0, 1}, eps, options.limits);
  const double opt = BruteForceMax(*coverage, false, options.limits).value;
  const std::uint64_t run_evals =
      RandomizedGreedy(*coverage, RngSeed{options.seed}, {0, 1}, eps).evals;
  const std::pair<const char*, double> guarantees[] = {
      {"greedy_rand_k_wise", RandomizedGreedyKWiseBound(k)},
      {"greedy_rand_k_submodular", RandomizedGreedyKSubmodularBound(k)},
  };
  for (const auto& [name, bound] : guarantees) {
    BenchRow row;
    row.instance = "coverage_tight";
    row.k = k;
    row.r = k;
    row.algorithm = "greedy-rand-exact";
    row.guarantee = name;
    row.value = expectation;
    row.opt = opt;
    row.bound = bound;
    row.seed = options.seed;
    row.evals = run_evals;
    row.eval_budget = EvalBudget(k, coverage->n());
    Finish(row, eps);
    rows.push_back(std::move(row));
  }
}

void RandomKSubmodularRows(int k, const BenchOptions& options,
                           std::vector<BenchRow>& rows) {
  const double eps = options.eps;
  for (int i = 0; i < options.instances; ++i) {
    const std::uint64_t instance_seed =
        SplitMix64(options.seed ^ SplitMix64((static_cast<std::uint64_t>(k) << 32) |
                                             static_cast<std::uint64_t>(i)));
    const TablePtr f = RandomKSubmodular(Dims{options.n, k, std::nullopt},
                                         2 * options.n + 2, instance_seed,
                                         options.limits);
    const double opt = BruteForceMax(*f, false, options.limits).value;
    const std::string name = "random_ksub_" + std::to_string(i);
    auto base_row = [&](const char* algorithm, const char* guarantee,
                        double bound) {
      BenchRow row;
      row.instance = name;
      row.k = k;
      row.r = 2;
      row.algorithm = algorithm;
      row.guarantee = guarantee;
      row.opt = opt;
      row.bound = bound;
      row.seed = instance_seed;
      return row;
    };

    {
      const MaximizeResult greedy = DeterministicGreedy(*f, {}, eps);
      BenchRow row = base_row("greedy-det", "greedy_det_r_wise",
                              DeterministicGreedyBound(2));
      row.value = greedy.value;
      row.evals = greedy.evals;
      row.eval_budget = EvalBudget(k, f->n());
      Finish(row, eps);
      rows.push_back(std::move(row));
    }
    {
      BenchRow row =
          base_row("random-exact", "random_orthant", RandomOrthantBound(k));
      row.value = ExactExpectationRandomOrthant(*f, options.limits);
      Finish(row, eps);
      rows.push_back(std::move(row));
    }
    const double ksub_bound = RandomizedGreedyKSubmodularBound(k);
    {
      BenchRow row = base_row("greedy-rand-exact", "greedy_rand_k_submodular",
                              ksub_bound);
      row.value = ExactExpectationRandomizedGreedy(*f, {}, eps, options.limits);
      row.evals = RandomizedGreedy(*f, RngSeed{instance_seed}, {}, eps).evals;
      row.eval_budget = EvalBudget(k, f->n());
      Finish(row, eps);
      rows.push_back(std::move(row));
    }
    if (options.trials > 0) {
      const EmpiricalEstimate estimate =
          EmpiricalExpectation(*f, RandomAlgorithm::kRandomizedGreedy,
                               options.trials, RngSeed{instance_seed}, {}, eps);
      BenchRow row = base_row("greedy-rand-empirical",
                              "greedy_rand_k_submodular", ksub_bound);
      row.value = estimate.mean;
      row.trials = options.trials;
      Finish(row, eps);
      rows.push_back(std::move(row));
    }
  }
}

std::string FormatDouble(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

BenchReport RunBench(const BenchOptions& options) {
  if (options.k.empty()) throw InputError("empty k range");
  if (options.k.lo < 2) throw InputError("bench needs k >= 2");
  if (options.r && options.r->empty()) throw InputError("empty r range");
  if (options.trials < 0) throw InputError("trials must be >= 0");
  BenchReport report{options.suite, {}};
  if (options.suite == "paper-tight") {
    for (int k = options.k.lo; k <= options.k.hi; ++k) {
      TightExampleRows(k, options, report.rows);
    }
  } else if (options.suite == "random-ksub") {
    if (options.n < 1) throw InputError("n must be >= 1");
    if (options.instances < 1) throw InputError("instances must be >= 1");
    for (int k = options.k.lo; k <= options.k.hi; ++k) {
      RandomKSubmodularRows(k, options, report.rows);
    }
  } else {
    throw InputError("unknown suite '" + options.suite +
                     "', expected paper-tight or random-ksub");
  }
  return report;
}

Json ToJson(const BenchReport& report) {
  Json rows = Json::array();
  for (const BenchRow& row : report.rows) {
    Json out;
    out["instance"] = row.instance;
    out["k"] = row.k;
    out["r"] = row.r ? Json(*row.r) : Json(nullptr);
    out["algorithm"] = row.algorithm;
    out["guarantee"] = row.guarantee;
    out["value"] = row.value;
    out["opt"] = row.opt;
    out["ratio"] = row.ratio;
    out["bound"] = row.bound;
    out["bound_satisfied"] = row.bound_satisfied;
    out["trials"] = row.trials;
    out["seed"] = row.seed;
    out["evals"] = row.evals ? Json(*row.evals) : Json(nullptr);
    out["eval_budget"] = row.eval_budget ? Json(*row.eval_budget) : Json(nullptr);
    rows.push_back(std::move(out));
  }
  Json out;
  out["suite"] = report.suite;
  out["all_bounds_satisfied"] = report.AllBoundsSatisfied();
  out["rows"] = std::move(rows);
  return out;
}

std::string ToCsv(const BenchReport& report) {
  std::ostringstream os;
  os << "instance,k,r,algorithm,guarantee,value,opt,ratio,bound,"
        "bound_satisfied,trials,seed,evals,eval_budget\n";
  for (const BenchRow& row : report.rows) {
    os << row.instance << ',' << row.k << ','
       << (row.r ? std::to_string(*row.r) : "") << ',' << row.algorithm << ','
       << row.guarantee << ',' << FormatDouble(row.value) << ','
       << FormatDouble(row.opt) << ',' << FormatDouble(row.ratio) << ','
       << FormatDouble(row.bound) << ','
       << (row.bound_satisfied ? "true" : "false") << ',' << row.trials << ','
       << row.seed << ',' << (row.evals ? std::to_string(*row.evals) : "")
       << ',' << (row.eval_budget ? std::to_string(*row.eval_budget) : "")
       << '\n';
  }
  return os.str();
}

}  // namespace ksub
