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

#include "ksub/instance.h"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "ksub/errors.h"

namespace ksub {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<InstanceKind, std::string_view>, 8> kKinds = {{
    {InstanceKind::kTabular, "tabular"},
    {InstanceKind::kMaxKCut, "max_k_cut"},
    {InstanceKind::kLayerLayout, "layer_layout"},
    {InstanceKind::kDetGreedyTight, "det_greedy_tight"},
    {InstanceKind::kCoverageTight, "coverage_tight"},
    {InstanceKind::kIndicator, "indicator"},
    {InstanceKind::kSum, "sum"},
    {InstanceKind::kEmbedding, "embedding"},
}};

std::string Field(const std::string& path, std::string_view name) {
  std::string out = path;
  if (!out.empty()) out += '.';
  out += name;
  return out;
}

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw InputError((field.empty() ? std::string("instance") : field) + ": " +
                   what);
}

const json& Require(const json& object, const std::string& path,
                    std::string_view name) {
  const auto it = object.find(name);
  if (it == object.end()) Fail(Field(path, name), "missing field");
  return *it;
}

long long AsInteger(const json& value, const std::string& field) {
  if (value.is_number_integer()) return value.get<long long>();
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (std::floor(d) == d && std::abs(d) < 1e15) return static_cast<long long>(d);
  }
  Fail(field, "expected an integer");
}

int AsInt(const json& value, const std::string& field) {
  const long long v = AsInteger(value, field);
  if (v < -1'000'000'000 || v > 1'000'000'000) Fail(field, "integer out of range");
  return static_cast<int>(v);
}

double AsNonnegative(const json& value, const std::string& field) {
  if (!value.is_number()) Fail(field, "expected a number");
  const double d = value.get<double>();
  if (!std::isfinite(d) || d < 0.0) Fail(field, "expected a finite value >= 0");
  return d;
}

const json& RequireArray(const json& object, const std::string& path,
                         std::string_view name) {
  const json& value = Require(object, path, name);
  if (!value.is_array()) Fail(Field(path, name), "expected an array");
  return value;
}

std::vector<double> NonnegativeArray(const json& array,
                                     const std::string& field) {
  std::vector<double> out;
  out.reserve(array.size());
  for (size_t i = 0; i < array.size(); ++i) {
    out.push_back(AsNonnegative(array[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void RequireN(const InstanceSpec& spec, const std::string& path, int n) {
  if (spec.dims.n != n) {
    Fail(Field(path, "n"), std::string(KindName(spec.kind)) + " needs n=" +
                               std::to_string(n) + ", got " +
                               std::to_string(spec.dims.n));
  }
}

void RequireKAtLeast(const InstanceSpec& spec, const std::string& path,
                     int k) {
  if (spec.dims.k < k) {
    Fail(Field(path, "k"), std::string(KindName(spec.kind)) + " needs k>=" +
                               std::to_string(k) + ", got " +
                               std::to_string(spec.dims.k));
  }
}

GraphInstance ParseGraph(const json& object, const std::string& path,
                         const InstanceSpec& spec, bool default_directed) {
  GraphInstance graph;
  graph.n_vertices = spec.dims.n;
  graph.directed = default_directed;
  if (const auto it = object.find("directed"); it != object.end()) {
    if (!it->is_boolean()) Fail(Field(path, "directed"), "expected a boolean");
    graph.directed = it->get<bool>();
  }
  const json& edges = RequireArray(object, path, "edges");
  for (size_t i = 0; i < edges.size(); ++i) {
    const std::string field = Field(path, "edges") + "[" + std::to_string(i) + "]";
    const json& edge = edges[i];
    if (!edge.is_array() || edge.size() != 2) Fail(field, "expected [u, v]");
    const int u = AsInt(edge[0], field + "[0]");
    const int v = AsInt(edge[1], field + "[1]");
    for (int endpoint : {u, v}) {
      if (endpoint < 0 || endpoint >= spec.dims.n) {
        Fail(field, "endpoint " + std::to_string(endpoint) +
                        " out of range [0, " + std::to_string(spec.dims.n) + ")");
      }
    }
    if (u == v) Fail(field, "self-loop");
    graph.edges.push_back(Edge{u, v, 1.0});
  }
  if (const auto it = object.find("weights"); it != object.end()) {
    if (!it->is_array()) Fail(Field(path, "weights"), "expected an array");
    if (it->size() != edges.size()) {
      Fail(Field(path, "weights"), "needs one weight per edge");
    }
    const std::vector<double> weights =
        NonnegativeArray(*it, Field(path, "weights"));
    for (size_t i = 0; i < weights.size(); ++i) graph.edges[i].weight = weights[i];
  }
  return graph;
}

InstanceSpec ParseAt(const json& object, const std::string& path) {
  if (!object.is_object()) Fail(path, "expected a JSON object");

  InstanceSpec spec;
  const json& kind = Require(object, path, "kind");
  if (!kind.is_string()) Fail(Field(path, "kind"), "expected a string");
  const std::string kind_name = kind.get<std::string>();
  bool known = false;
  for (const auto& [value, name] : kKinds) {
    if (name == kind_name) {
      spec.kind = value;
      known = true;
    }
  }
  if (!known) Fail(Field(path, "kind"), "unknown kind '" + kind_name + "'");

  spec.dims.n = AsInt(Require(object, path, "n"), Field(path, "n"));
  spec.dims.k = AsInt(Require(object, path, "k"), Field(path, "k"));
  if (spec.dims.n < 1) Fail(Field(path, "n"), "must be >= 1");
  if (spec.dims.k < 1) Fail(Field(path, "k"), "must be >= 1");
  if (const auto it = object.find("r"); it != object.end()) {
    spec.dims.r = AsInt(*it, Field(path, "r"));
    if (*spec.dims.r < 1 || *spec.dims.r > spec.dims.k) {
      Fail(Field(path, "r"), "must lie in [1, k] = [1, " +
                                 std::to_string(spec.dims.k) + "], got " +
                                 std::to_string(*spec.dims.r));
    }
  }
  if (const auto it = object.find("id"); it != object.end()) {
    if (!it->is_string()) Fail(Field(path, "id"), "expected a string");
    spec.id = it->get<std::string>();
  }

  switch (spec.kind) {
    case InstanceKind::kTabular: {
      const std::string field = Field(path, "values");
      const json& values = RequireArray(object, path, "values");
      const std::uint64_t expected = StateCount(spec.dims);
      if (values.size() != expected) {
        Fail(field, "needs (k+1)^n = " + std::to_string(expected) +
                        " entries, got " + std::to_string(values.size()));
      }
      spec.payload = TabularPayload{NonnegativeArray(values, field)};
      break;
    }
    case InstanceKind::kMaxKCut:
      spec.payload = GraphPayload{ParseGraph(object, path, spec, false)};
      if (std::get<GraphPayload>(spec.payload).graph.directed) {
        Fail(Field(path, "directed"), "max_k_cut needs an undirected graph");
      }
      break;
    case InstanceKind::kLayerLayout:
      RequireKAtLeast(spec, path, 2);
      spec.payload = GraphPayload{ParseGraph(object, path, spec, true)};
      if (!std::get<GraphPayload>(spec.payload).graph.directed) {
        Fail(Field(path, "directed"), "layer_layout needs a directed graph");
      }
      break;
    case InstanceKind::kDetGreedyTight:
      RequireN(spec, path, 2);
      RequireKAtLeast(spec, path, 2);
      if (!spec.dims.r) Fail(Field(path, "r"), "missing field");
      spec.payload = DetGreedyTightPayload{};
      break;
    case InstanceKind::kCoverageTight:
      RequireN(spec, path, 2);
      RequireKAtLeast(spec, path, 2);
      spec.payload = CoverageTightPayload{};
      break;
    case InstanceKind::kIndicator: {
      RequireN(spec, path, 1);
      const std::string field = Field(path, "target");
      const int target = AsInt(Require(object, path, "target"), field);
      if (target < 1 || target > spec.dims.k) {
        Fail(field, "must lie in [1, k], got " + std::to_string(target));
      }
      spec.payload = IndicatorPayload{target};
      break;
    }
    case InstanceKind::kSum: {
      const json& terms = RequireArray(object, path, "terms");
      if (terms.empty()) Fail(Field(path, "terms"), "needs at least one term");
      SumPayload sum;
      for (size_t i = 0; i < terms.size(); ++i) {
        const std::string term_path =
            Field(path, "terms") + "[" + std::to_string(i) + "]";
        auto term = std::make_shared<InstanceSpec>(ParseAt(terms[i], term_path));
        if (term->dims.n != spec.dims.n || term->dims.k != spec.dims.k) {
          Fail(term_path, "term dims (n, k) differ from the sum's");
        }
        sum.terms.push_back(std::move(term));
      }
      if (const auto it = object.find("weights"); it != object.end()) {
        if (!it->is_array()) Fail(Field(path, "weights"), "expected an array");
        if (it->size() != terms.size()) {
          Fail(Field(path, "weights"), "needs one weight per term");
        }
        sum.weights = NonnegativeArray(*it, Field(path, "weights"));
      } else {
        sum.weights.assign(terms.size(), 1.0);
      }
      spec.payload = std::move(sum);
      break;
    }
    case InstanceKind::kEmbedding: {
      if (spec.dims.k != 2) Fail(Field(path, "k"), "embedding needs k=2");
      const std::string base_path = Field(path, "base");
      auto base = std::make_shared<InstanceSpec>(
          ParseAt(Require(object, path, "base"), base_path));
      if (base->dims.k != 1) Fail(Field(base_path, "k"), "must be 1");
      if (base->dims.n != spec.dims.n) {
        Fail(Field(base_path, "n"), "must equal the embedding's n");
      }
      spec.payload = EmbeddingPayload{std::move(base)};
      break;
    }
  }
  return spec;
}

}  // namespace

std::string_view KindName(InstanceKind kind) {
  for (const auto& [value, name] : kKinds) {
    if (value == kind) return name;
  }
  return "unknown";
}

InstanceSpec ParseInstance(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return ParseInstanceJson(document);
}

InstanceSpec ParseInstanceJson(const json& document) {
  return ParseAt(document, "");
}

OraclePtr BuildOracle(const InstanceSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::kTabular:
      return std::make_shared<TabularFunction>(
          spec.dims, std::get<TabularPayload>(spec.payload).values);
    case InstanceKind::kMaxKCut:
      return MakeMaxKCut(std::get<GraphPayload>(spec.payload).graph,
                         spec.dims.k);
    case InstanceKind::kLayerLayout:
      return MakeLayerLayout(std::get<GraphPayload>(spec.payload).graph,
                             spec.dims.k);
    case InstanceKind::kDetGreedyTight:
      return MakeDetGreedyTight(spec.dims.k, *spec.dims.r);
    case InstanceKind::kCoverageTight:
      return MakeCoverageTight(spec.dims.k);
    case InstanceKind::kIndicator:
      return MakeIndicator(spec.dims.k,
                           std::get<IndicatorPayload>(spec.payload).target);
    case InstanceKind::kSum: {
      const auto& sum = std::get<SumPayload>(spec.payload);
      std::vector<OraclePtr> terms;
      for (const auto& term : sum.terms) terms.push_back(BuildOracle(*term));
      return SumCombine(std::move(terms), sum.weights);
    }
    case InstanceKind::kEmbedding:
      return EmbedSubmodular(
          BuildOracle(*std::get<EmbeddingPayload>(spec.payload).base));
  }
  throw InputError("unknown instance kind");
}

}  // namespace ksub
