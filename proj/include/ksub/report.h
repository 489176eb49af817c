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

#ifndef KSUB_REPORT_H_
#define KSUB_REPORT_H_

#include <string>

#include "json.hpp"
#include "ksub/checkers.h"
#include "ksub/maximizers.h"

namespace ksub {

using Json = nlohmann::ordered_json;

Json ToJson(const Assignment& x);
Json ToJson(const Counterexample& cx);
// {"property", "holds", "counterexample" | null, "evals"}
Json ToJson(const CheckReport& report);
Json ToJson(const GreedyTrace& step);
// {"solution", "value", "evals", "trace" | null}
Json ToJson(const MaximizeResult& result);

}  // namespace ksub

#endif  // KSUB_REPORT_H_
