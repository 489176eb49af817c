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

#ifndef KSUB_MAXIMIZERS_H_
#define KSUB_MAXIMIZERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ksub/assignment.h"
#include "ksub/oracle.h"

namespace ksub {

struct MaximizeResult {
  Assignment solution;
  double value = 0.0;
  // Oracle calls made by the run, including the final value.
  std::uint64_t evals = 0;
  std::optional<std::vector<GreedyTrace>> trace;
};

// Seed of one randomized run. Equal seeds give identical runs.
struct RngSeed {
  std::uint64_t value = 0;
};

// Processing order for the greedy algorithms. Empty means 0, 1, ..., n-1.
using ElementOrder = std::vector<int>;

// Exhaustive maximizer. Enumerates orthants only (k^n states) or every
// partial solution ((k+1)^n states); ties go to the smallest index. With
// over_orthants_only = false the returned solution may be partial.
// Throws InputError above limits.max_states.
MaximizeResult BruteForceMax(const ValueOracle& f, bool over_orthants_only,
                             const Limits& limits = {});

// One orthant drawn uniformly at random.
MaximizeResult NaiveRandomSample(const ValueOracle& f, RngSeed seed);

// Mean of f over all k^n orthants.
double ExactExpectationRandomOrthant(const ValueOracle& f,
                                     const Limits& limits = {});

// Visits elements in `order`, giving each the label with the largest marginal
// against the current partial solution; the smallest label wins ties within
// eps. At most 1 + n*k oracle calls.
MaximizeResult DeterministicGreedy(const ValueOracle& f,
                                   const ElementOrder& order = {},
                                   double eps = kDefaultEps);

// Visits elements in `order`; with y_i = max(0, marginal of label i) and
// beta = sum y_i, picks label i with probability y_i / beta, or label 1 when
// beta <= eps. The label is drawn by inverse CDF over y_1..y_k from a single
// uniform per element. At most 1 + n*k oracle calls.
MaximizeResult RandomizedGreedy(const ValueOracle& f, RngSeed seed,
                                const ElementOrder& order = {},
                                double eps = kDefaultEps);

// Exact expectation of RandomizedGreedy's final value, by depth-first
// enumeration of its decision tree weighted by branch probabilities.
// Throws InputError when k^n exceeds limits.max_states.
double ExactExpectationRandomizedGreedy(const ValueOracle& f,
                                        const ElementOrder& order = {},
                                        double eps = kDefaultEps,
                                        const Limits& limits = {});

enum class RandomAlgorithm { kRandomOrthant, kRandomizedGreedy };

struct EmpiricalEstimate {
  double mean = 0.0;
  // Standard error of the mean; absent for a single trial.
  std::optional<double> std_error;
  int trials = 0;
};

// Sample mean over `trials` independent runs; trial t uses seed
// seed.value ^ t, so any sharding of trials reproduces the serial result.
EmpiricalEstimate EmpiricalExpectation(const ValueOracle& f,
                                       RandomAlgorithm algorithm, int trials,
                                       RngSeed seed,
                                       const ElementOrder& order = {},
                                       double eps = kDefaultEps);

// Throws InputError unless order is a permutation of 0..n-1 (or empty).
void ValidateOrder(const ElementOrder& order, int n);

// Parses "2,0,1".
ElementOrder ParseOrder(const std::string& text);

}  // namespace ksub

#endif  // KSUB_MAXIMIZERS_H_
