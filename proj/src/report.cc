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

#include "ksub/report.h"

namespace ksub {

Json ToJson(const Assignment& x) {
  Json out = Json::array();
  for (Label l : x) out.push_back(l);
  return out;
}

Json ToJson(const Counterexample& cx) {
  Json out;
  out["property"] = cx.property;
  Json points;
  for (const auto& [name, x] : cx.points) points[name] = ToJson(x);
  out["points"] = std::move(points);
  if (cx.element) out["element"] = *cx.element;
  if (!cx.labels.empty()) out["labels"] = cx.labels;
  out["lhs"] = cx.lhs;
  out["rhs"] = cx.rhs;
  return out;
}

Json ToJson(const CheckReport& report) {
  Json out;
  out["property"] = report.property;
  out["holds"] = report.holds;
  out["counterexample"] =
      report.counterexample ? ToJson(*report.counterexample) : Json(nullptr);
  out["evals"] = report.evals;
  return out;
}

Json ToJson(const GreedyTrace& step) {
  Json out;
  out["element"] = step.element;
  out["marginals"] = step.marginals;
  out["beta"] = step.beta ? Json(*step.beta) : Json(nullptr);
  out["chosen"] = step.chosen;
  return out;
}

Json ToJson(const MaximizeResult& result) {
  Json out;
  out["solution"] = ToJson(result.solution);
  out["value"] = result.value;
  out["evals"] = result.evals;
  if (result.trace) {
    Json trace = Json::array();
    for (const GreedyTrace& step : *result.trace) trace.push_back(ToJson(step));
    out["trace"] = std::move(trace);
  } else {
    out["trace"] = nullptr;
  }
  return out;
}

}  // namespace ksub
