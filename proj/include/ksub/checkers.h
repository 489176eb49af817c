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

#ifndef KSUB_CHECKERS_H_
#define KSUB_CHECKERS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksub/assignment.h"
#include "ksub/oracle.h"
#include "ksub/zoo.h"

namespace ksub {

// A concrete witness that an inequality  lhs >= rhs  fails by more than eps.
//
// `points` name the assignments involved, e.g. {"s", ...}, {"t", ...},
// {"min0", ...}, {"max0", ...} for the k-submodular inequality. Monotonicity
// witnesses also carry the element and the label set.
struct Counterexample {
  // Property whose inequality is violated. Differs from the report's property
  // only for the characterization check, which forwards a sub-check witness.
  std::string property;
  std::vector<std::pair<std::string, Assignment>> points;
  std::optional<int> element;
  std::vector<Label> labels;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckReport {
  std::string property;
  bool holds = true;
  std::optional<Counterexample> counterexample;
  // Number of table lookups performed.
  std::uint64_t evals = 0;
};

// Property names used in reports.
inline constexpr const char* kKSubmodular = "k_submodular";
inline constexpr const char* kOrthantSubmodular = "orthant_submodular";
inline constexpr const char* kOrthantPairInequality = "orthant_pair_inequality";
inline constexpr const char* kCharacterization = "characterization";
std::string RWiseMonotoneName(int r);  // "r_wise_monotone:<r>"

// All checkers enumerate exhaustively in index order and report the first
// violation found. An inequality A >= B holds iff A >= B - eps. They throw
// RangeViolation on a negative table entry and InputError when the amount of
// work exceeds limits.max_pairs.

// f(s) + f(t) >= f(min0(s,t)) + f(max0(s,t)) for every pair s, t.
CheckReport CheckKSubmodular(const TabularFunction& f, double eps = kDefaultEps,
                             const Limits& limits = {});

// The k-submodular inequality restricted to pairs of partial solutions lying
// in a common orthant; equivalently, every induced set function is
// submodular.
CheckReport CheckOrthantSubmodular(const TabularFunction& f,
                                   double eps = kDefaultEps,
                                   const Limits& limits = {});

// h(S) = f(x|_S) for an orthant x, as a k = 1 oracle over the same n.
// Throws PreconditionError when x is not an orthant.
OraclePtr InducedSetFunction(OraclePtr f, const Assignment& orthant);

// sum_{i in I} marginal(f, i, e, s) >= 0 for every e, every s with s_e = 0
// and every r-subset I of labels. The reported label set is the r labels
// with the smallest marginals (ties by label), which minimizes the sum.
CheckReport CheckRWiseMonotone(const TabularFunction& f, int r,
                               double eps = kDefaultEps,
                               const Limits& limits = {});

// f(s) + f(t) >= 2 f(id0(s,t)) for every pair of orthants.
CheckReport CheckOrthantPairInequality(const TabularFunction& f,
                                       double eps = kDefaultEps,
                                       const Limits& limits = {});

// Both sides of the characterization of k-submodularity (k >= 2):
// k-submodular  <=>  submodular in every orthant and pairwise monotone.
struct CharacterizationResult {
  CheckReport k_submodular;
  CheckReport orthant_submodular;
  CheckReport pairwise_monotone;
  bool left() const { return k_submodular.holds; }
  bool right() const {
    return orthant_submodular.holds && pairwise_monotone.holds;
  }
  bool agree() const { return left() == right(); }
};

CharacterizationResult EvaluateCharacterization(const TabularFunction& f,
                                                double eps = kDefaultEps,
                                                const Limits& limits = {});

// holds iff both sides agree. The equivalence is a known result, so a
// disagreement points at a bug in one of the checkers; the report carries the
// witness from whichever side failed. Throws PreconditionError for k < 2.
CheckReport CheckCharacterization(const TabularFunction& f,
                                  double eps = kDefaultEps,
                                  const Limits& limits = {});

}  // namespace ksub

#endif  // KSUB_CHECKERS_H_
