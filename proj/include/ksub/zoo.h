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

#ifndef KSUB_ZOO_H_
#define KSUB_ZOO_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ksub/assignment.h"
#include "ksub/oracle.h"

namespace ksub {

// f materialized over all (k+1)^n assignments in EncodeIndex order.
// Lookups through at() never touch an underlying oracle.
class TabularFunction final : public ValueOracle {
 public:
  // Throws InputError on a length mismatch, RangeViolation on a negative
  // entry.
  TabularFunction(Dims dims, std::vector<double> values);

  std::span<const double> values() const { return values_; }
  double at(std::uint64_t index) const { return values_[index]; }
  double at(const Assignment& x) const { return values_[EncodeIndex(x, k())]; }

 protected:
  double Evaluate(const Assignment& x) const override { return at(x); }

 private:
  std::vector<double> values_;
};

using TablePtr = std::shared_ptr<const TabularFunction>;

// Materializes f. Throws InputError when (k+1)^n exceeds limits.max_states
// and RangeViolation when f is negative somewhere.
TablePtr Tabulate(const ValueOracle& f, const Limits& limits = {});

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

struct GraphInstance {
  int n_vertices = 0;
  std::vector<Edge> edges;
  bool directed = false;

  // Endpoints in range, no self-loops, nonnegative weights.
  void Validate() const;
};

// sum over edges of w * [x_u != x_v]. A pair with exactly one unassigned
// endpoint counts as cut. Requires an undirected graph.
OraclePtr MakeMaxKCut(const GraphInstance& graph, int k);

// Directed layering objective: per edge (u, v)
//   0               if x_u = x_v = 0
//   (k - x_u) / k   if x_u != 0, x_v = 0
//   (x_v - 1) / k   if x_u = 0, x_v != 0
//   [x_u < x_v]     otherwise.
// Submodular in every orthant and k-wise monotone, but not k-submodular for
// k >= 3. Requires a directed graph and k >= 2.
OraclePtr MakeLayerLayout(const GraphInstance& graph, int k);

// Two-element instance on which the deterministic greedy attains exactly
// 1/(r+1) of the optimum:
//   f(x_u, x_v) = [x_u != 0]/(r+1) + r/(r+1) * [x_u != 1 and x_v = 2].
OraclePtr MakeDetGreedyTight(int k, int r);

// Two-element weighted coverage over the universe {a, b}, w(a) = 1,
// w(b) = gamma = 1/sqrt(k-1). Label 1 of u covers a, labels 2..k of u cover
// b, every label of v covers b; label 0 covers nothing.
class CoverageTight final : public ValueOracle {
 public:
  explicit CoverageTight(int k);
  double gamma() const { return gamma_; }

 protected:
  double Evaluate(const Assignment& x) const override;

 private:
  double gamma_;
};

std::shared_ptr<const CoverageTight> MakeCoverageTight(int k);

// Single element, f(x) = [x = target].
OraclePtr MakeIndicator(int k, Label target);

// Pointwise nonnegative combination. All terms must share dims (n, k).
OraclePtr SumCombine(std::vector<OraclePtr> terms, std::vector<double> weights);

// Views a function of m elements as a function of n elements that reads only
// coordinates elements[0..m). elements must be distinct and in range.
OraclePtr Lift(OraclePtr base, int n, std::vector<int> elements);

// f(S, T) = g(S) + g(U \ T) - g(U) for a set function g (k = 1). The pair
// (S, T) is the k = 2 assignment with x_e = 1 on S and x_e = 2 on T.
// g(U) is evaluated once at construction, so each evaluation costs two
// g-calls. Values may be negative; nothing is clamped.
class EmbeddedBisubmodular final : public ValueOracle {
 public:
  explicit EmbeddedBisubmodular(OraclePtr base);

  const ValueOracle& base() const { return *base_; }
  double base_of_ground_set() const { return g_of_ground_set_; }

 protected:
  double Evaluate(const Assignment& x) const override;

 private:
  OraclePtr base_;
  double g_of_ground_set_;
};

std::shared_ptr<const EmbeddedBisubmodular> EmbedSubmodular(OraclePtr base);

// Random k-submodular table: a nonnegative random combination of `atoms`
// k-submodular building blocks (unary indicators, cut edges for k = 1,
// support-coverage edges and the pairwise tight examples lifted onto random
// element pairs for k >= 2). Deterministic in seed.
TablePtr RandomKSubmodular(const Dims& dims, int atoms, std::uint64_t seed,
                           const Limits& limits = {});

}  // namespace ksub

#endif  // KSUB_ZOO_H_
