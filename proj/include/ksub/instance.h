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

#ifndef KSUB_INSTANCE_H_
#define KSUB_INSTANCE_H_

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ksub/assignment.h"
#include "ksub/oracle.h"
#include "ksub/zoo.h"

namespace ksub {

enum class InstanceKind {
  kTabular,
  kMaxKCut,
  kLayerLayout,
  kDetGreedyTight,
  kCoverageTight,
  kIndicator,
  kSum,
  kEmbedding,
};

std::string_view KindName(InstanceKind kind);

struct InstanceSpec;

struct TabularPayload {
  std::vector<double> values;
};
struct GraphPayload {
  GraphInstance graph;
};
// det_greedy_tight keeps its r in Dims.
struct DetGreedyTightPayload {};
struct CoverageTightPayload {};
struct IndicatorPayload {
  Label target = 1;
};
struct SumPayload {
  std::vector<std::shared_ptr<const InstanceSpec>> terms;
  std::vector<double> weights;
};
struct EmbeddingPayload {
  std::shared_ptr<const InstanceSpec> base;
};

// A validated instance description. Parsing checks every field, so building
// the oracle afterwards cannot fail on input grounds.
struct InstanceSpec {
  InstanceKind kind = InstanceKind::kTabular;
  Dims dims;
  std::string id;
  std::variant<TabularPayload, GraphPayload, DetGreedyTightPayload,
               CoverageTightPayload, IndicatorPayload, SumPayload,
               EmbeddingPayload>
      payload;
};

// Throws InputError naming the offending field, e.g.
// "terms[1].edges[0]: endpoint 5 out of range [0, 3)".
InstanceSpec ParseInstance(std::string_view text);
InstanceSpec ParseInstanceJson(const nlohmann::json& document);

OraclePtr BuildOracle(const InstanceSpec& spec);

}  // namespace ksub

#endif  // KSUB_INSTANCE_H_
