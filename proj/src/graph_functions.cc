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

void GraphInstance::Validate() const {
  if (n_vertices < 1) throw InputError("graph needs at least one vertex");
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& edge = edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (edge.u < 0 || edge.u >= n_vertices || edge.v < 0 ||
        edge.v >= n_vertices) {
      throw InputError(where + ": endpoint out of range");
    }
    if (edge.u == edge.v) throw InputError(where + ": self-loop");
    if (!(edge.weight >= 0.0)) throw InputError(where + ": negative weight");
  }
}

namespace {

class EdgeSumOracle final : public ValueOracle {
 public:
  using EdgeTerm = double (*)(Label xu, Label xv, int k);

  EdgeSumOracle(const GraphInstance& graph, int k, EdgeTerm term)
      : ValueOracle(Dims{graph.n_vertices, k, std::nullopt}),
        edges_(graph.edges),
        term_(term) {}

 protected:
  double Evaluate(const Assignment& x) const override {
    double total = 0.0;
    for (const Edge& edge : edges_) {
      total += edge.weight * term_(x[edge.u], x[edge.v], k());
    }
    return total;
  }

 private:
  std::vector<Edge> edges_;
  EdgeTerm term_;
};

double CutTerm(Label xu, Label xv, int /*k*/) { return xu != xv ? 1.0 : 0.0; }

double LayerTerm(Label xu, Label xv, int k) {
  const double kd = static_cast<double>(k);
  if (xu == kUnassigned && xv == kUnassigned) return 0.0;
  if (xv == kUnassigned) return (kd - xu) / kd;
  if (xu == kUnassigned) return (xv - 1.0) / kd;
  return xu < xv ? 1.0 : 0.0;
}

}  // namespace

OraclePtr MakeMaxKCut(const GraphInstance& graph, int k) {
  graph.Validate();
  if (graph.directed) throw InputError("max_k_cut needs an undirected graph");
  if (k < 1) throw InputError("max_k_cut needs k >= 1");
  return std::make_shared<EdgeSumOracle>(graph, k, &CutTerm);
}

OraclePtr MakeLayerLayout(const GraphInstance& graph, int k) {
  graph.Validate();
  if (!graph.directed) throw InputError("layer_layout needs a directed graph");
  if (k < 2) throw InputError("layer_layout needs k >= 2");
  return std::make_shared<EdgeSumOracle>(graph, k, &LayerTerm);
}

}  // namespace ksub
