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

#include <random>
#include <string>
#include <vector>

#include "ksub/errors.h"
#include "ksub/zoo.h"

namespace ksub {
namespace {

enum class AtomKind {
  kCutEdge,
  kEitherAssigned,
  kIndicator,
  kDetGreedyTight,
  kCoverageTight,
  kLayer
};

// [x_u != 0 or x_v != 0]: a monotone submodular function of the support.
OraclePtr EitherAssigned(int k) {
  return MakeFunctionOracle(Dims{2, k, std::nullopt}, [](const Assignment& x) {
    return x[0] != kUnassigned || x[1] != kUnassigned ? 1.0 : 0.0;
  });
}

std::vector<AtomKind> AvailableAtoms(const Dims& dims) {
  std::vector<AtomKind> kinds = {AtomKind::kIndicator};
  if (dims.n >= 2) {
    // The cut term is k-submodular only for k = 1; (1,1) and (1,2) violate
    // the inequality for larger k.
    kinds.push_back(dims.k == 1 ? AtomKind::kCutEdge
                                : AtomKind::kEitherAssigned);
    if (dims.k >= 2) {
      kinds.push_back(AtomKind::kDetGreedyTight);
      kinds.push_back(AtomKind::kCoverageTight);
    }
    // The layering term is bisubmodular only for k = 2.
    if (dims.k == 2) kinds.push_back(AtomKind::kLayer);
  }
  return kinds;
}

}  // namespace

TablePtr RandomKSubmodular(const Dims& dims, int atoms, std::uint64_t seed,
                           const Limits& limits) {
  dims.Validate();
  if (atoms < 0) throw InputError("atoms must be >= 0");
  const std::uint64_t states = StateCount(dims);
  if (states > limits.max_states) {
    throw InputError("random_ksubmodular needs " + std::to_string(states) +
                     " states, above the cap of " +
                     std::to_string(limits.max_states));
  }

  std::mt19937_64 rng(seed);
  const std::vector<AtomKind> kinds = AvailableAtoms(dims);
  std::uniform_int_distribution<size_t> pick_kind(0, kinds.size() - 1);
  std::uniform_int_distribution<int> pick_element(0, dims.n - 1);
  std::uniform_int_distribution<Label> pick_label(1, dims.k);
  std::uniform_real_distribution<double> pick_weight(0.05, 1.0);

  auto distinct_pair = [&]() {
    const int u = pick_element(rng);
    int v = pick_element(rng);
    while (v == u) v = pick_element(rng);
    return std::vector<int>{u, v};
  };

  std::vector<double> values(states, 0.0);
  for (int a = 0; a < atoms; ++a) {
    OraclePtr atom;
    switch (kinds[pick_kind(rng)]) {
      case AtomKind::kIndicator:
        atom = Lift(MakeIndicator(dims.k, pick_label(rng)), dims.n,
                    {pick_element(rng)});
        break;
      case AtomKind::kCutEdge: {
        const auto pair = distinct_pair();
        atom = MakeMaxKCut(
            GraphInstance{dims.n, {Edge{pair[0], pair[1], 1.0}}, false},
            dims.k);
        break;
      }
      case AtomKind::kEitherAssigned:
        atom = Lift(EitherAssigned(dims.k), dims.n, distinct_pair());
        break;
      case AtomKind::kDetGreedyTight: {
        // r <= 2 keeps the term pairwise monotone, hence k-submodular.
        const int r = std::uniform_int_distribution<int>(1, 2)(rng);
        atom = Lift(MakeDetGreedyTight(dims.k, r), dims.n, distinct_pair());
        break;
      }
      case AtomKind::kCoverageTight:
        atom = Lift(MakeCoverageTight(dims.k), dims.n, distinct_pair());
        break;
      case AtomKind::kLayer: {
        const auto pair = distinct_pair();
        atom = MakeLayerLayout(
            GraphInstance{dims.n, {Edge{pair[0], pair[1], 1.0}}, true},
            dims.k);
        break;
      }
    }
    const double weight = pick_weight(rng);
    const TablePtr table = Tabulate(*atom, limits);
    for (std::uint64_t i = 0; i < states; ++i) {
      values[i] += weight * table->at(i);
    }
  }
  return std::make_shared<TabularFunction>(
      dims, std::move(values));
}

}  // namespace ksub
