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

#include "ksub/checkers.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ksub/errors.h"

namespace ksub {
namespace {

// Digits of every state index, so pair loops avoid repeated decoding.
class StateDigits {
 public:
  explicit StateDigits(const Dims& dims)
      : n_(dims.n), k_(dims.k), states_(StateCount(dims)) {
    digits_.resize(states_ * static_cast<std::uint64_t>(n_));
    powers_.resize(static_cast<size_t>(n_));
    std::uint64_t p = 1;
    for (int e = 0; e < n_; ++e) {
      powers_[e] = p;
      p *= static_cast<std::uint64_t>(k_ + 1);
    }
    for (std::uint64_t i = 0; i < states_; ++i) {
      std::uint64_t rest = i;
      for (int e = 0; e < n_; ++e) {
        digits_[i * n_ + e] = static_cast<Label>(rest % (k_ + 1));
        rest /= static_cast<std::uint64_t>(k_ + 1);
      }
    }
  }

  std::uint64_t states() const { return states_; }
  Label digit(std::uint64_t index, int e) const { return digits_[index * n_ + e]; }
  std::uint64_t power(int e) const { return powers_[e]; }

 private:
  int n_;
  int k_;
  std::uint64_t states_;
  std::vector<Label> digits_;
  std::vector<std::uint64_t> powers_;
};

void CheckWork(std::uint64_t work, const Limits& limits, const char* what) {
  if (work > limits.max_pairs) {
    throw InputError(std::string(what) + " needs " + std::to_string(work) +
                     " comparisons, above the cap of " +
                     std::to_string(limits.max_pairs));
  }
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

bool Violates(double lhs, double rhs, double eps) { return lhs < rhs - eps; }

// Index of the orthant x restricted to the element bitmask.
std::uint64_t RestrictedIndex(const StateDigits& digits, std::uint64_t orthant,
                              unsigned mask, int n) {
  std::uint64_t index = 0;
  for (int e = 0; e < n; ++e) {
    if (mask & (1u << e)) index += digits.digit(orthant, e) * digits.power(e);
  }
  return index;
}

}  // namespace

std::string RWiseMonotoneName(int r) {
  return "r_wise_monotone:" + std::to_string(r);
}

CheckReport CheckKSubmodular(const TabularFunction& f, double eps,
                             const Limits& limits) {
  const Dims& dims = f.dims();
  CheckWork(SaturatingPow(StateCount(dims), 2), limits, kKSubmodular);
  const StateDigits digits(dims);
  const std::uint64_t states = digits.states();
  CheckReport report{kKSubmodular, true, std::nullopt, 0};

  for (std::uint64_t s = 0; s < states; ++s) {
    const double fs = f.at(s);
    for (std::uint64_t t = s + 1; t < states; ++t) {
      std::uint64_t lo = 0;
      std::uint64_t hi = 0;
      for (int e = 0; e < dims.n; ++e) {
        const Label a = digits.digit(s, e);
        const Label b = digits.digit(t, e);
        if (a != 0 && b != 0 && a != b) continue;
        lo += static_cast<std::uint64_t>(std::min(a, b)) * digits.power(e);
        hi += static_cast<std::uint64_t>(std::max(a, b)) * digits.power(e);
      }
      const double lhs = fs + f.at(t);
      const double rhs = f.at(lo) + f.at(hi);
      report.evals += 4;
      if (Violates(lhs, rhs, eps)) {
        report.holds = false;
        report.counterexample = Counterexample{
            kKSubmodular,
            {{"s", DecodeIndex(s, dims)},
             {"t", DecodeIndex(t, dims)},
             {"min0", DecodeIndex(lo, dims)},
             {"max0", DecodeIndex(hi, dims)}},
            std::nullopt,
            {},
            lhs,
            rhs};
        return report;
      }
    }
  }
  return report;
}

CheckReport CheckOrthantSubmodular(const TabularFunction& f, double eps,
                                   const Limits& limits) {
  const Dims& dims = f.dims();
  if (dims.n > 16) throw InputError("orthant check supports n <= 16");
  const std::uint64_t subsets = std::uint64_t{1} << dims.n;
  CheckWork(SaturatingMul(OrthantCount(dims), subsets * subsets), limits,
            kOrthantSubmodular);
  const StateDigits digits(dims);
  CheckReport report{kOrthantSubmodular, true, std::nullopt, 0};

  Assignment x(std::vector<Label>(static_cast<size_t>(dims.n), Label{1}));
  do {
    const std::uint64_t orthant = EncodeIndex(x, dims.k);
    std::vector<double> h(subsets);
    for (unsigned mask = 0; mask < subsets; ++mask) {
      h[mask] = f.at(RestrictedIndex(digits, orthant, mask, dims.n));
    }
    report.evals += subsets;
    for (unsigned a = 0; a < subsets; ++a) {
      for (unsigned b = a + 1; b < subsets; ++b) {
        // Nested sets give equality.
        if ((a & b) == a || (a & b) == b) continue;
        const double lhs = h[a] + h[b];
        const double rhs = h[a & b] + h[a | b];
        if (Violates(lhs, rhs, eps)) {
          auto restricted = [&](unsigned mask) {
            return DecodeIndex(RestrictedIndex(digits, orthant, mask, dims.n),
                               dims);
          };
          report.holds = false;
          report.counterexample = Counterexample{
              kOrthantSubmodular,
              {{"orthant", x},
               {"a", restricted(a)},
               {"b", restricted(b)},
               {"min0", restricted(a & b)},
               {"max0", restricted(a | b)}},
              std::nullopt,
              {},
              lhs,
              rhs};
          return report;
        }
      }
    }
  } while (NextAssignment(x, 1, dims.k));
  return report;
}

OraclePtr InducedSetFunction(OraclePtr f, const Assignment& orthant) {
  if (orthant.size() != f->n()) {
    throw InputError("induced set function: orthant has wrong length");
  }
  if (!IsOrthant(orthant)) {
    throw PreconditionError("induced set function: " + orthant.ToString() +
                            " is not an orthant");
  }
  const Dims dims{f->n(), 1, std::nullopt};
  return MakeFunctionOracle(
      dims, [f = std::move(f), orthant](const Assignment& s) {
        Assignment restricted(orthant.size());
        for (int e = 0; e < s.size(); ++e) {
          if (s[e] != kUnassigned) restricted[e] = orthant[e];
        }
        return (*f)(restricted);
      });
}

CheckReport CheckRWiseMonotone(const TabularFunction& f, int r, double eps,
                               const Limits& limits) {
  const Dims& dims = f.dims();
  if (r < 1 || r > dims.k) {
    throw InputError("r-wise monotonicity needs 1 <= r <= k, got r=" +
                     std::to_string(r));
  }
  const std::string name = RWiseMonotoneName(r);
  CheckWork(SaturatingMul(StateCount(dims), static_cast<std::uint64_t>(dims.n) * dims.k), limits,
            name.c_str());
  const StateDigits digits(dims);
  CheckReport report{name, true, std::nullopt, 0};

  std::vector<double> marginals(static_cast<size_t>(dims.k));
  std::vector<Label> order(static_cast<size_t>(dims.k));
  for (std::uint64_t s = 0; s < digits.states(); ++s) {
    const double fs = f.at(s);
    ++report.evals;
    for (int e = 0; e < dims.n; ++e) {
      if (digits.digit(s, e) != kUnassigned) continue;
      for (Label i = 1; i <= dims.k; ++i) {
        marginals[i - 1] = f.at(s + i * digits.power(e)) - fs;
      }
      report.evals += dims.k;
      std::iota(order.begin(), order.end(), Label{1});
      std::stable_sort(order.begin(), order.end(), [&](Label a, Label b) {
        return marginals[a - 1] < marginals[b - 1];
      });
      double sum = 0.0;
      for (int j = 0; j < r; ++j) sum += marginals[order[j] - 1];
      if (Violates(sum, 0.0, eps)) {
        std::vector<Label> labels(order.begin(), order.begin() + r);
        std::sort(labels.begin(), labels.end());
        report.holds = false;
        report.counterexample = Counterexample{
            name, {{"s", DecodeIndex(s, dims)}}, e, std::move(labels), sum, 0.0};
        return report;
      }
    }
  }
  return report;
}

CheckReport CheckOrthantPairInequality(const TabularFunction& f, double eps,
                                       const Limits& limits) {
  const Dims& dims = f.dims();
  CheckWork(SaturatingPow(OrthantCount(dims), 2), limits,
            kOrthantPairInequality);
  CheckReport report{kOrthantPairInequality, true, std::nullopt, 0};

  std::vector<Assignment> orthants;
  Assignment x(std::vector<Label>(static_cast<size_t>(dims.n), Label{1}));
  do {
    orthants.push_back(x);
  } while (NextAssignment(x, 1, dims.k));

  for (size_t i = 0; i < orthants.size(); ++i) {
    const double fs = f.at(orthants[i]);
    for (size_t j = i + 1; j < orthants.size(); ++j) {
      const Assignment common = Id0(orthants[i], orthants[j]);
      const double lhs = fs + f.at(orthants[j]);
      const double rhs = 2.0 * f.at(common);
      report.evals += 3;
      if (Violates(lhs, rhs, eps)) {
        report.holds = false;
        report.counterexample = Counterexample{
            kOrthantPairInequality,
            {{"s", orthants[i]}, {"t", orthants[j]}, {"id0", common}},
            std::nullopt,
            {},
            lhs,
            rhs};
        return report;
      }
    }
  }
  return report;
}

CharacterizationResult EvaluateCharacterization(const TabularFunction& f,
                                                double eps,
                                                const Limits& limits) {
  if (f.k() < 2) {
    throw PreconditionError("characterization check needs k >= 2");
  }
  return CharacterizationResult{CheckKSubmodular(f, eps, limits),
                                CheckOrthantSubmodular(f, eps, limits),
                                CheckRWiseMonotone(f, 2, eps, limits)};
}

CheckReport CheckCharacterization(const TabularFunction& f, double eps,
                                  const Limits& limits) {
  const CharacterizationResult sides = EvaluateCharacterization(f, eps, limits);
  CheckReport report{kCharacterization, sides.agree(), std::nullopt,
                     sides.k_submodular.evals +
                         sides.orthant_submodular.evals +
                         sides.pairwise_monotone.evals};
  if (!report.holds) {
    if (!sides.left()) {
      report.counterexample = sides.k_submodular.counterexample;
    } else if (!sides.orthant_submodular.holds) {
      report.counterexample = sides.orthant_submodular.counterexample;
    } else {
      report.counterexample = sides.pairwise_monotone.counterexample;
    }
  }
  return report;
}

}  // namespace ksub
