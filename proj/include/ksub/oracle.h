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

#ifndef KSUB_ORACLE_H_
#define KSUB_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ksub/assignment.h"

namespace ksub {

// A k-set function f : {0..k}^n -> R+ accessed only through evaluation
// queries. Evaluation must be a pure function of its argument; the call
// counter is the only mutable state and is updated atomically, so an oracle
// over immutable data may be shared across threads.
class ValueOracle {
 public:
  explicit ValueOracle(Dims dims);
  virtual ~ValueOracle() = default;

  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  const Dims& dims() const { return dims_; }
  int n() const { return dims_.n; }
  int k() const { return dims_.k; }

  // Evaluates f(x) and bumps the call counter. Throws InputError when x does
  // not fit dims(). Negative results are returned as-is; consumers that
  // require R+ raise RangeViolation themselves.
  double operator()(const Assignment& x) const;

  std::uint64_t calls() const {
    return calls_.load(std::memory_order_relaxed);
  }

 protected:
  // x is already validated against dims().
  virtual double Evaluate(const Assignment& x) const = 0;

 private:
  Dims dims_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

using OraclePtr = std::shared_ptr<const ValueOracle>;

// Adapts a callable to the oracle interface.
class FunctionOracle final : public ValueOracle {
 public:
  using Fn = std::function<double(const Assignment&)>;
  FunctionOracle(Dims dims, Fn fn);

 protected:
  double Evaluate(const Assignment& x) const override { return fn_(x); }

 private:
  Fn fn_;
};

OraclePtr MakeFunctionOracle(Dims dims, FunctionOracle::Fn fn);

// Audit record for one element processed by a greedy algorithm.
struct GreedyTrace {
  int element = 0;
  // Raw marginals for the deterministic variant, clamped at 0 for the
  // randomized one; marginals[i-1] belongs to label i.
  std::vector<double> marginals;
  // Sum of the clamped marginals; randomized variant only.
  std::optional<double> beta;
  Label chosen = 1;
};

// f(s + i*1_e) - f(s). Exactly two oracle calls.
// Throws PreconditionError if s_e != 0 and InputError on a bad label.
double Marginal(const ValueOracle& f, Label i, int e, const Assignment& s);

// Completes s to an orthant, visiting unassigned elements in index order and
// giving each the label of largest marginal (smallest label among ties
// within eps). For r-wise monotone f the value never decreases.
Assignment ExtendToOrthant(const ValueOracle& f, const Assignment& s,
                           double eps = kDefaultEps);

}  // namespace ksub

#endif  // KSUB_ORACLE_H_
