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

#include <string>
#include <utility>

#include "ksub/errors.h"
#include "ksub/zoo.h"

namespace ksub {

TabularFunction::TabularFunction(Dims dims, std::vector<double> values)
    : ValueOracle(std::move(dims)), values_(std::move(values)) {
  const std::uint64_t expected = StateCount(this->dims());
  if (values_.size() != expected) {
    throw InputError("tabular function needs (k+1)^n = " +
                     std::to_string(expected) + " values, got " +
                     std::to_string(values_.size()));
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0.0) {
      throw RangeViolation(
          "oracle range violation: f" +
          DecodeIndex(i, this->dims()).ToString() + " = " +
          std::to_string(values_[i]) + " < 0");
    }
  }
}

TablePtr Tabulate(const ValueOracle& f, const Limits& limits) {
  const std::uint64_t states = StateCount(f.dims());
  if (states > limits.max_states) {
    throw InputError("tabulation needs " + std::to_string(states) +
                     " states, above the cap of " +
                     std::to_string(limits.max_states));
  }
  if (const auto* table = dynamic_cast<const TabularFunction*>(&f)) {
    return std::make_shared<TabularFunction>(
        table->dims(),
        std::vector<double>(table->values().begin(), table->values().end()));
  }
  std::vector<double> values;
  values.reserve(states);
  Assignment x(f.n());
  do {
    values.push_back(f(x));
  } while (NextAssignment(x, 0, f.k()));
  return std::make_shared<TabularFunction>(f.dims(), std::move(values));
}

}  // namespace ksub
