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

#include <cmath>
#include <string>

#include "ksub/errors.h"
#include "ksub/zoo.h"

namespace ksub {

OraclePtr MakeDetGreedyTight(int k, int r) {
  if (k < 2) throw InputError("det_greedy_tight needs k >= 2");
  if (r < 1 || r > k) {
    throw InputError("det_greedy_tight needs 1 <= r <= k, got r=" +
                     std::to_string(r) + ", k=" + std::to_string(k));
  }
  const double low = 1.0 / (r + 1.0);
  const double high = r / (r + 1.0);
  return MakeFunctionOracle(
      Dims{2, k, r}, [low, high](const Assignment& x) {
        double value = 0.0;
        if (x[0] != kUnassigned) value += low;
        if (x[0] != 1 && x[1] == 2) value += high;
        return value;
      });
}

CoverageTight::CoverageTight(int k)
    : ValueOracle(Dims{2, k, std::nullopt}),
      gamma_(k >= 2 ? 1.0 / std::sqrt(k - 1.0) : 0.0) {
  if (k < 2) throw InputError("coverage_tight needs k >= 2");
}

double CoverageTight::Evaluate(const Assignment& x) const {
  const bool covers_a = x[0] == 1;
  const bool covers_b = x[0] >= 2 || x[1] != kUnassigned;
  return (covers_a ? 1.0 : 0.0) + (covers_b ? gamma_ : 0.0);
}

std::shared_ptr<const CoverageTight> MakeCoverageTight(int k) {
  return std::make_shared<CoverageTight>(k);
}

OraclePtr MakeIndicator(int k, Label target) {
  if (k < 1) throw InputError("indicator needs k >= 1");
  if (target < 1 || target > k) {
    throw InputError("indicator target must lie in [1, k], got " +
                     std::to_string(target));
  }
  return MakeFunctionOracle(Dims{1, k, std::nullopt},
                            [target](const Assignment& x) {
                              return x[0] == target ? 1.0 : 0.0;
                            });
}

}  // namespace ksub
