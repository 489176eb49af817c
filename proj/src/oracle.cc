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

#include "ksub/oracle.h"

#include <algorithm>
#include <string>
#include <utility>

#include "ksub/errors.h"

namespace ksub {

ValueOracle::ValueOracle(Dims dims) : dims_(std::move(dims)) {
  dims_.Validate();
}

double ValueOracle::operator()(const Assignment& x) const {
  if (x.size() != dims_.n) {
    throw InputError("assignment " + x.ToString() + " has length " +
                     std::to_string(x.size()) + ", expected n=" +
                     std::to_string(dims_.n));
  }
  for (Label l : x) {
    if (l < 0 || l > dims_.k) {
      throw InputError("assignment " + x.ToString() + " has a label outside [0, " +
                       std::to_string(dims_.k) + "]");
    }
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return Evaluate(x);
}

FunctionOracle::FunctionOracle(Dims dims, Fn fn)
    : ValueOracle(std::move(dims)), fn_(std::move(fn)) {}

OraclePtr MakeFunctionOracle(Dims dims, FunctionOracle::Fn fn) {
  return std::make_shared<FunctionOracle>(std::move(dims), std::move(fn));
}

double Marginal(const ValueOracle& f, Label i, int e, const Assignment& s) {
  if (e < 0 || e >= s.size()) {
    throw InputError("marginal: element " + std::to_string(e) + " out of range");
  }
  if (i < 1 || i > f.k()) {
    throw InputError("marginal: label " + std::to_string(i) + " outside [1, k]");
  }
  if (s[e] != kUnassigned) {
    throw PreconditionError("marginal: element " + std::to_string(e) +
                            " is already assigned in " + s.ToString());
  }
  return f(s.With(e, i)) - f(s);
}

Assignment ExtendToOrthant(const ValueOracle& f, const Assignment& s,
                           double eps) {
  Assignment x = s;
  std::vector<double> values(static_cast<size_t>(f.k()));
  for (int e = 0; e < x.size(); ++e) {
    if (x[e] != kUnassigned) continue;
    for (Label i = 1; i <= f.k(); ++i) values[i - 1] = f(x.With(e, i));
    const double best = *std::max_element(values.begin(), values.end());
    Label q = 1;
    while (values[q - 1] < best - eps) ++q;
    x[e] = q;
  }
  return x;
}

}  // namespace ksub
