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

// Independent reference implementations used only by tests. They work on
// Assignment objects and the public lattice operations, never on the index
// arithmetic the checkers use internally.

#ifndef KSUB_TESTS_TEST_ORACLES_H_
#define KSUB_TESTS_TEST_ORACLES_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ksub/assignment.h"
#include "ksub/checkers.h"
#include "ksub/zoo.h"

namespace ksub::testing {

inline std::vector<Assignment> AllAssignments(const Dims& dims, Label lo) {
  std::vector<Assignment> out;
  Assignment x(std::vector<Label>(static_cast<size_t>(dims.n), lo));
  do {
    out.push_back(x);
  } while (NextAssignment(x, lo, dims.k));
  return out;
}

// Value lookup by full re-evaluation through the oracle interface.
inline double Value(const ValueOracle& f, const Assignment& x) { return f(x); }

// Straight from the definition, every ordered pair.
inline bool NaiveIsKSubmodular(const ValueOracle& f, double eps) {
  const auto all = AllAssignments(f.dims(), 0);
  for (const auto& s : all) {
    for (const auto& t : all) {
      if (f(s) + f(t) < f(Min0(s, t)) + f(Max0(s, t)) - eps) return false;
    }
  }
  return true;
}

// Partial solutions a, b lying in a common orthant x: a = x|_A, b = x|_B.
inline bool NaiveIsOrthantSubmodular(const ValueOracle& f, double eps) {
  const int n = f.n();
  for (const auto& x : AllAssignments(f.dims(), 1)) {
    for (unsigned a = 0; a < (1u << n); ++a) {
      for (unsigned b = 0; b < (1u << n); ++b) {
        std::vector<int> set_a;
        std::vector<int> set_b;
        for (int e = 0; e < n; ++e) {
          if (a & (1u << e)) set_a.push_back(e);
          if (b & (1u << e)) set_b.push_back(e);
        }
        const Assignment xa = Restrict(x, set_a);
        const Assignment xb = Restrict(x, set_b);
        if (f(xa) + f(xb) < f(Min0(xa, xb)) + f(Max0(xa, xb)) - eps) {
          return false;
        }
      }
    }
  }
  return true;
}

// Enumerates every r-subset of labels explicitly.
inline bool NaiveIsRWiseMonotone(const ValueOracle& f, int r, double eps) {
  const int k = f.k();
  for (const auto& s : AllAssignments(f.dims(), 0)) {
    for (int e = 0; e < f.n(); ++e) {
      if (s[e] != kUnassigned) continue;
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        double sum = 0.0;
        for (int i = 1; i <= k; ++i) {
          if (mask & (1u << (i - 1))) sum += f(s.With(e, i)) - f(s);
        }
        if (sum < -eps) return false;
      }
    }
  }
  return true;
}

inline double NaiveMax(const ValueOracle& f) {
  double best = f(Assignment(f.n()));
  for (const auto& x : AllAssignments(f.dims(), 0)) best = std::max(best, f(x));
  return best;
}

// Recomputes the witnessed inequality from scratch.
inline bool ReproducesViolation(const ValueOracle& f, const Counterexample& cx,
                                double eps) {
  auto point = [&](const std::string& name) -> const Assignment& {
    for (const auto& [key, x] : cx.points) {
      if (key == name) return x;
    }
    throw std::runtime_error("counterexample lacks point " + name);
  };
  if (cx.property == kKSubmodular || cx.property == kOrthantSubmodular) {
    const bool orthant = cx.property == kOrthantSubmodular;
    const Assignment& s = point(orthant ? "a" : "s");
    const Assignment& t = point(orthant ? "b" : "t");
    if (orthant) {
      const Assignment& x = point("orthant");
      if (!IsOrthant(x) || Restrict(x, Support(s)) != s ||
          Restrict(x, Support(t)) != t) {
        return false;
      }
    }
    return f(s) + f(t) < f(Min0(s, t)) + f(Max0(s, t)) - eps;
  }
  if (cx.property == kOrthantPairInequality) {
    const Assignment& s = point("s");
    const Assignment& t = point("t");
    return IsOrthant(s) && IsOrthant(t) && f(s) + f(t) < 2 * f(Id0(s, t)) - eps;
  }
  if (cx.property.rfind("r_wise_monotone:", 0) == 0) {
    const int r = std::stoi(cx.property.substr(16));
    const Assignment& s = point("s");
    if (!cx.element || s[*cx.element] != kUnassigned ||
        static_cast<int>(cx.labels.size()) != r) {
      return false;
    }
    double sum = 0.0;
    for (Label i : cx.labels) sum += f(s.With(*cx.element, i)) - f(s);
    return sum < -eps;
  }
  return false;
}

inline TablePtr UniformRandomTable(const Dims& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::vector<double> values(StateCount(dims));
  for (double& v : values) v = value(rng);
  return std::make_shared<TabularFunction>(dims, std::move(values));
}

}  // namespace ksub::testing

#endif  // KSUB_TESTS_TEST_ORACLES_H_
