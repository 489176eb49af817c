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

#include "ksub/maximizers.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "ksub/errors.h"

namespace ksub {
namespace {

ElementOrder ResolveOrder(const ElementOrder& order, int n) {
  ValidateOrder(order, n);
  if (!order.empty()) return order;
  ElementOrder identity(static_cast<size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  return identity;
}

void CheckStates(std::uint64_t states, const Limits& limits, const char* what) {
  if (states > limits.max_states) {
    throw InputError(std::string(what) + " needs " + std::to_string(states) +
                     " states, above the cap of " +
                     std::to_string(limits.max_states));
  }
}

Assignment AllOnes(int n) {
  return Assignment(std::vector<Label>(static_cast<size_t>(n), Label{1}));
}

// Evaluates f(s + i*1_e) for every label. Values are f-values, not
// marginals, so the caller can reuse the chosen one as the next f(s).
std::vector<double> ExtensionValues(const ValueOracle& f, const Assignment& s,
                                    int e) {
  std::vector<double> values(static_cast<size_t>(f.k()));
  for (Label i = 1; i <= f.k(); ++i) values[i - 1] = f(s.With(e, i));
  return values;
}

// Clamped marginals y and their sum beta for the randomized greedy step.
double ClampedMarginals(std::span<const double> extension_values, double fs,
                        std::vector<double>& y) {
  y.resize(extension_values.size());
  double beta = 0.0;
  for (size_t i = 0; i < extension_values.size(); ++i) {
    y[i] = std::max(0.0, extension_values[i] - fs);
    beta += y[i];
  }
  return beta;
}

// Inverse CDF over y in label order.
Label SampleLabel(std::span<const double> y, double beta, double uniform) {
  const double target = uniform * beta;
  double cumulative = 0.0;
  Label last_positive = 1;
  for (size_t i = 0; i < y.size(); ++i) {
    if (y[i] <= 0.0) continue;
    cumulative += y[i];
    last_positive = static_cast<Label>(i + 1);
    if (target < cumulative) return last_positive;
  }
  return last_positive;
}

double ExpectationFrom(const ValueOracle& f, Assignment& s,
                       const ElementOrder& order, size_t position, double eps) {
  const double fs = f(s);
  if (position == order.size()) return fs;
  const int e = order[position];
  const std::vector<double> values = ExtensionValues(f, s, e);
  std::vector<double> y;
  const double beta = ClampedMarginals(values, fs, y);
  double expectation = 0.0;
  if (beta <= eps) {
    s[e] = 1;
    expectation = ExpectationFrom(f, s, order, position + 1, eps);
  } else {
    for (size_t i = 0; i < y.size(); ++i) {
      if (y[i] <= 0.0) continue;
      s[e] = static_cast<Label>(i + 1);
      expectation +=
          (y[i] / beta) * ExpectationFrom(f, s, order, position + 1, eps);
    }
  }
  s[e] = kUnassigned;
  return expectation;
}

}  // namespace

void ValidateOrder(const ElementOrder& order, int n) {
  if (order.empty()) return;
  if (static_cast<int>(order.size()) != n) {
    throw InputError("order must list all " + std::to_string(n) +
                     " elements, got " + std::to_string(order.size()));
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int e : order) {
    if (e < 0 || e >= n || seen[e]) {
      throw InputError("order is not a permutation of 0.." +
                       std::to_string(n - 1));
    }
    seen[e] = true;
  }
}

ElementOrder ParseOrder(const std::string& text) {
  ElementOrder order;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = std::min(text.find(',', start), text.size());
    const std::string token = text.substr(start, comma - start);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw InputError("bad element order '" + text + "'");
    }
    order.push_back(value);
    start = comma + 1;
  }
  return order;
}

MaximizeResult BruteForceMax(const ValueOracle& f, bool over_orthants_only,
                             const Limits& limits) {
  const std::uint64_t before = f.calls();
  const Label lo = over_orthants_only ? 1 : 0;
  CheckStates(over_orthants_only ? OrthantCount(f.dims()) : StateCount(f.dims()),
              limits, "brute force");
  Assignment x(std::vector<Label>(static_cast<size_t>(f.n()), lo));
  MaximizeResult best{x, f(x), 0, std::nullopt};
  while (NextAssignment(x, lo, f.k())) {
    const double value = f(x);
    if (value > best.value) {
      best.value = value;
      best.solution = x;
    }
  }
  best.evals = f.calls() - before;
  return best;
}

MaximizeResult NaiveRandomSample(const ValueOracle& f, RngSeed seed) {
  const std::uint64_t before = f.calls();
  std::mt19937_64 rng(seed.value);
  std::uniform_int_distribution<Label> label(1, f.k());
  Assignment x(f.n());
  for (int e = 0; e < f.n(); ++e) x[e] = label(rng);
  MaximizeResult result{x, f(x), 0, std::nullopt};
  result.evals = f.calls() - before;
  return result;
}

double ExactExpectationRandomOrthant(const ValueOracle& f,
                                     const Limits& limits) {
  const std::uint64_t orthants = OrthantCount(f.dims());
  CheckStates(orthants, limits, "random orthant expectation");
  Assignment x = AllOnes(f.n());
  double total = 0.0;
  do {
    total += f(x);
  } while (NextAssignment(x, 1, f.k()));
  return total / static_cast<double>(orthants);
}

MaximizeResult DeterministicGreedy(const ValueOracle& f,
                                   const ElementOrder& order, double eps) {
  const ElementOrder visit = ResolveOrder(order, f.n());
  const std::uint64_t before = f.calls();
  Assignment s(f.n());
  double fs = f(s);
  std::vector<GreedyTrace> trace;
  trace.reserve(visit.size());
  for (int e : visit) {
    const std::vector<double> values = ExtensionValues(f, s, e);
    GreedyTrace step{e, {}, std::nullopt, 1};
    step.marginals.reserve(values.size());
    for (double v : values) step.marginals.push_back(v - fs);
    const double best =
        *std::max_element(step.marginals.begin(), step.marginals.end());
    Label q = 1;
    while (step.marginals[q - 1] < best - eps) ++q;
    step.chosen = q;
    s[e] = q;
    fs = values[q - 1];
    trace.push_back(std::move(step));
  }
  return MaximizeResult{std::move(s), fs, f.calls() - before, std::move(trace)};
}

MaximizeResult RandomizedGreedy(const ValueOracle& f, RngSeed seed,
                                const ElementOrder& order, double eps) {
  const ElementOrder visit = ResolveOrder(order, f.n());
  const std::uint64_t before = f.calls();
  std::mt19937_64 rng(seed.value);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Assignment s(f.n());
  double fs = f(s);
  std::vector<GreedyTrace> trace;
  trace.reserve(visit.size());
  for (int e : visit) {
    const std::vector<double> values = ExtensionValues(f, s, e);
    GreedyTrace step{e, {}, std::nullopt, 1};
    const double beta = ClampedMarginals(values, fs, step.marginals);
    step.beta = beta;
    const double u = uniform(rng);
    step.chosen =
        beta <= eps ? Label{1} : SampleLabel(step.marginals, beta, u);
    s[e] = step.chosen;
    fs = values[step.chosen - 1];
    trace.push_back(std::move(step));
  }
  return MaximizeResult{std::move(s), fs, f.calls() - before, std::move(trace)};
}

double ExactExpectationRandomizedGreedy(const ValueOracle& f,
                                        const ElementOrder& order, double eps,
                                        const Limits& limits) {
  const ElementOrder visit = ResolveOrder(order, f.n());
  CheckStates(OrthantCount(f.dims()), limits,
              "randomized greedy expectation");
  Assignment s(f.n());
  return ExpectationFrom(f, s, visit, 0, eps);
}

EmpiricalEstimate EmpiricalExpectation(const ValueOracle& f,
                                       RandomAlgorithm algorithm, int trials,
                                       RngSeed seed, const ElementOrder& order,
                                       double eps) {
  if (trials < 1) throw InputError("trials must be >= 1");
  ValidateOrder(order, f.n());
  // Welford's running mean and squared deviation.
  double mean = 0.0;
  double m2 = 0.0;
  for (int t = 0; t < trials; ++t) {
    const RngSeed trial_seed{seed.value ^ static_cast<std::uint64_t>(t)};
    const double value =
        algorithm == RandomAlgorithm::kRandomOrthant
            ? NaiveRandomSample(f, trial_seed).value
            : RandomizedGreedy(f, trial_seed, order, eps).value;
    const double delta = value - mean;
    mean += delta / (t + 1);
    m2 += delta * (value - mean);
  }
  EmpiricalEstimate estimate{mean, std::nullopt, trials};
  if (trials > 1) {
    estimate.std_error = std::sqrt(m2 / (trials - 1) / trials);
  }
  return estimate;
}

}  // namespace ksub
