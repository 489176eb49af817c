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

#ifndef KSUB_BENCH_H_
#define KSUB_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksub/assignment.h"
#include "ksub/report.h"

namespace ksub {

// Approximation guarantees, as fractions of the optimum.

// Uniform random orthant on a k-submodular function: 1/4 for k = 2, 1/k for
// k >= 3. Throws InputError for k < 2.
double RandomOrthantBound(int k);
// Deterministic greedy, submodular in every orthant and r-wise monotone.
double DeterministicGreedyBound(int r);
// Randomized greedy, submodular in every orthant and k-wise monotone.
double RandomizedGreedyKWiseBound(int k);
// Randomized greedy on k-submodular functions: 1/(1 + max(1, sqrt((k-1)/4))).
double RandomizedGreedyKSubmodularBound(int k);

struct BenchRow {
  std::string instance;
  int k = 0;
  std::optional<int> r;
  // "greedy-det", "greedy-rand-exact", "greedy-rand-empirical",
  // "random-exact", "random-empirical".
  std::string algorithm;
  // Which guarantee `bound` comes from.
  std::string guarantee;
  double value = 0.0;
  double opt = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  bool bound_satisfied = false;
  int trials = 0;
  std::uint64_t seed = 0;
  // Oracle calls of one run and the 2kn budget, for greedy rows.
  std::optional<std::uint64_t> evals;
  std::optional<std::uint64_t> eval_budget;
};

struct BenchReport {
  std::string suite;
  std::vector<BenchRow> rows;
  bool AllBoundsSatisfied() const;
};

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
};

// "2..6" or "4". Throws InputError on malformed text.
IntRange ParseRange(const std::string& text);

struct BenchOptions {
  // "paper-tight" or "random-ksub".
  std::string suite = "paper-tight";
  IntRange k{2, 6};
  // Defaults to 1..k for each k.
  std::optional<IntRange> r;
  // Sampled runs per empirical row; 0 disables empirical rows.
  int trials = 0;
  std::uint64_t seed = 0;
  // random-ksub only.
  int instances = 10;
  int n = 3;
  double eps = kDefaultEps;
  Limits limits;
};

// Throws InputError on an unknown suite, an empty k range or k < 2.
BenchReport RunBench(const BenchOptions& options);

Json ToJson(const BenchReport& report);
std::string ToCsv(const BenchReport& report);

}  // namespace ksub

#endif  // KSUB_BENCH_H_
