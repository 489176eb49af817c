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

#include "ksub/zoo.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "ksub/checkers.h"
#include "ksub/errors.h"
#include "test_oracles.h"

namespace ksub {
namespace {

GraphInstance Edge01(bool directed) {
  return GraphInstance{2, {Edge{0, 1, 1.0}}, directed};
}

GraphInstance RandomGraph(int n, bool directed, std::mt19937_64& rng) {
  GraphInstance g{n, {}, directed};
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || (!directed && v < u)) continue;
      if (coin(rng) < 0.6) g.edges.push_back(Edge{u, v, 0.5 + coin(rng)});
    }
  }
  return g;
}

TEST(MaxKCutTest, SingleEdgeValues) {
  const OraclePtr f = MakeMaxKCut(Edge01(false), 2);
  EXPECT_EQ((*f)({1, 2}), 1.0);
  EXPECT_EQ((*f)({1, 1}), 0.0);
  EXPECT_EQ((*f)({1, 0}), 1.0);
  EXPECT_EQ((*f)({0, 0}), 0.0);
}

TEST(MaxKCutTest, TriangleAllDifferent) {
  const GraphInstance triangle{
      3, {Edge{0, 1, 1.0}, Edge{1, 2, 1.0}, Edge{0, 2, 1.0}}, false};
  EXPECT_EQ((*MakeMaxKCut(triangle, 3))({1, 2, 3}), 3.0);
}

TEST(MaxKCutTest, RejectsDirectedAndMalformedGraphs) {
  EXPECT_THROW(MakeMaxKCut(Edge01(true), 2), InputError);
  EXPECT_THROW(MakeMaxKCut(GraphInstance{2, {Edge{0, 2, 1.0}}, false}, 2),
               InputError);
  EXPECT_THROW(MakeMaxKCut(GraphInstance{2, {Edge{1, 1, 1.0}}, false}, 2),
               InputError);
  EXPECT_THROW(MakeMaxKCut(GraphInstance{2, {Edge{0, 1, -1.0}}, false}, 2),
               InputError);
}

TEST(LayerLayoutTest, SingleEdgeValuesK4) {
  const OraclePtr f = MakeLayerLayout(Edge01(true), 4);
  EXPECT_EQ((*f)({0, 0}), 0.0);
  EXPECT_DOUBLE_EQ((*f)({1, 0}), 3.0 / 4.0);
  EXPECT_DOUBLE_EQ((*f)({0, 3}), 2.0 / 4.0);
  EXPECT_EQ((*f)({1, 2}), 1.0);
  EXPECT_EQ((*f)({3, 2}), 0.0);
}

TEST(LayerLayoutTest, RejectsUndirectedGraphs) {
  EXPECT_THROW(MakeLayerLayout(Edge01(false), 3), InputError);
  EXPECT_THROW(MakeLayerLayout(Edge01(true), 1), InputError);
}

TEST(DetGreedyTightTest, Values) {
  for (int k = 2; k <= 5; ++k) {
    for (int r = 1; r <= k; ++r) {
      const OraclePtr f = MakeDetGreedyTight(k, r);
      EXPECT_DOUBLE_EQ((*f)({1, 1}), 1.0 / (r + 1));
      EXPECT_DOUBLE_EQ((*f)({2, 2}), 1.0);
      EXPECT_EQ((*f)({0, 0}), 0.0);
      EXPECT_EQ(f->dims().r, r);
    }
  }
  EXPECT_THROW(MakeDetGreedyTight(2, 3), InputError);
  EXPECT_THROW(MakeDetGreedyTight(3, 0), InputError);
  EXPECT_THROW(MakeDetGreedyTight(1, 1), InputError);
}

TEST(CoverageTightTest, Values) {
  for (int k = 2; k <= 8; ++k) {
    const auto f = MakeCoverageTight(k);
    const double gamma = 1.0 / std::sqrt(k - 1.0);
    EXPECT_DOUBLE_EQ(f->gamma(), gamma);
    for (Label j = 1; j <= k; ++j) {
      EXPECT_DOUBLE_EQ((*f)({1, j}), 1.0 + gamma);
      for (Label i = 2; i <= k; ++i) EXPECT_DOUBLE_EQ((*f)({i, j}), gamma);
    }
    EXPECT_EQ((*f)({0, 0}), 0.0);
  }
  EXPECT_THROW(MakeCoverageTight(1), InputError);
}

TEST(IndicatorTest, Values) {
  const OraclePtr f = MakeIndicator(2, 1);
  EXPECT_EQ((*f)({1}), 1.0);
  EXPECT_EQ((*f)({2}), 0.0);
  EXPECT_EQ((*f)({0}), 0.0);
  EXPECT_EQ((*MakeIndicator(3, 3))({3}), 1.0);
  EXPECT_THROW(MakeIndicator(3, 4), InputError);
  EXPECT_THROW(MakeIndicator(3, 0), InputError);
}

TEST(SumCombineTest, Examples) {
  const OraclePtr uv = MakeMaxKCut(GraphInstance{3, {Edge{0, 1, 1.0}}, false}, 2);
  const OraclePtr vw = MakeMaxKCut(GraphInstance{3, {Edge{1, 2, 1.0}}, false}, 2);
  EXPECT_EQ((*SumCombine({uv, vw}, {1.0, 1.0}))({1, 2, 1}), 2.0);

  const OraclePtr zero = SumCombine({uv, vw}, {0.0, 0.0});
  const OraclePtr half = SumCombine({uv}, {0.5});
  for (const auto& x : testing::AllAssignments(uv->dims(), 0)) {
    EXPECT_EQ((*zero)(x), 0.0);
    EXPECT_DOUBLE_EQ((*half)(x), 0.5 * (*uv)(x));
  }
}

TEST(SumCombineTest, RejectsMismatches) {
  const OraclePtr a = MakeIndicator(2, 1);
  const OraclePtr b = MakeIndicator(3, 1);
  EXPECT_THROW(SumCombine({a, b}, {1.0, 1.0}), InputError);
  EXPECT_THROW(SumCombine({a}, {-1.0}), InputError);
  EXPECT_THROW(SumCombine({a}, {1.0, 2.0}), InputError);
  EXPECT_THROW(SumCombine({}, {}), InputError);
}

TEST(SumCombineTest, PreservesKSubmodularity) {
  const Dims dims{3, 3, std::nullopt};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const OraclePtr sum =
        SumCombine({RandomKSubmodular(dims, 4, seed),
                    RandomKSubmodular(dims, 4, seed + 100)},
                   {0.3, 2.0});
    EXPECT_TRUE(CheckKSubmodular(*Tabulate(*sum)).holds);
  }
}

// Cut function of the single edge {a, b}: g(S) = [|S ∩ {a,b}| = 1].
OraclePtr EdgeCutSetFunction() {
  return MakeMaxKCut(Edge01(false), 1);
}

TEST(EmbeddingTest, CutFunctionValues) {
  const OraclePtr g = EdgeCutSetFunction();
  ASSERT_EQ((*g)({0, 0}), 0.0);
  ASSERT_EQ((*g)({1, 0}), 1.0);
  ASSERT_EQ((*g)({0, 1}), 1.0);
  ASSERT_EQ((*g)({1, 1}), 0.0);
  const auto f = EmbedSubmodular(g);
  EXPECT_EQ(f->k(), 2);
  EXPECT_EQ((*f)({1, 2}), 2.0);  // S = {a}, T = {b}
  EXPECT_EQ((*f)({0, 0}), 0.0);  // S = T = empty
  EXPECT_EQ((*f)({2, 0}), 1.0);  // S = empty, T = {a}
}

TEST(EmbeddingTest, TwoBaseCallsPerEvaluation) {
  const OraclePtr g = EdgeCutSetFunction();
  const auto f = EmbedSubmodular(g);
  const auto before = g->calls();
  (*f)({1, 2});
  EXPECT_EQ(g->calls() - before, 2u);
}

TEST(EmbeddingTest, RequiresSetFunction) {
  EXPECT_THROW(EmbedSubmodular(MakeIndicator(2, 1)), InputError);
}

TEST(EmbeddingTest, NonnegativeEmbeddingsAreBisubmodular) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 3;
    const auto f = EmbedSubmodular(MakeMaxKCut(RandomGraph(n, false, rng), 1));
    EXPECT_TRUE(CheckKSubmodular(*Tabulate(*f)).holds);
  }
}

TEST(EmbeddingTest, NegativeValuesSurfaceAsRangeViolation) {
  // Modular g(S) = |S| has g(U) = 2, so f(empty, U) = 0 + 0 - 2.
  const OraclePtr g = MakeFunctionOracle(
      Dims{2, 1, std::nullopt},
      [](const Assignment& x) { return static_cast<double>(x[0] + x[1]); });
  const auto f = EmbedSubmodular(g);
  EXPECT_EQ((*f)({2, 2}), -2.0);
  EXPECT_THROW(Tabulate(*f), RangeViolation);
}

TEST(TabulateTest, IndicatorTable) {
  const TablePtr t = Tabulate(*MakeIndicator(2, 1));
  ASSERT_EQ(t->values().size(), 3u);
  EXPECT_EQ(t->at(0), 0.0);
  EXPECT_EQ(t->at(1), 1.0);
  EXPECT_EQ(t->at(2), 0.0);
}

TEST(TabulateTest, ConstantZeroAndIdempotence) {
  const OraclePtr zero = MakeFunctionOracle(Dims{2, 2, std::nullopt},
                                            [](const Assignment&) { return 0.0; });
  const TablePtr t = Tabulate(*zero);
  for (double v : t->values()) EXPECT_EQ(v, 0.0);

  const TablePtr once = Tabulate(*MakeCoverageTight(3));
  const TablePtr twice = Tabulate(*once);
  EXPECT_TRUE(std::equal(once->values().begin(), once->values().end(),
                         twice->values().begin(), twice->values().end()));
}

TEST(TabulateTest, LookupsMakeNoUnderlyingCalls) {
  const auto f = MakeCoverageTight(3);
  const TablePtr t = Tabulate(*f);
  const auto calls = f->calls();
  for (const auto& x : testing::AllAssignments(f->dims(), 0)) {
    EXPECT_EQ(t->at(x), (*t)(x));
  }
  EXPECT_EQ(f->calls(), calls);
}

TEST(TabulateTest, CapAndRangeErrors) {
  const OraclePtr big = MakeFunctionOracle(Dims{20, 3, std::nullopt},
                                           [](const Assignment&) { return 1.0; });
  EXPECT_THROW(Tabulate(*big), InputError);
  EXPECT_THROW(Tabulate(*MakeIndicator(2, 1), Limits{2, 100}), InputError);
  EXPECT_THROW(TabularFunction(Dims{1, 1, std::nullopt}, {0.0, -1.0}),
               RangeViolation);
  EXPECT_THROW(TabularFunction(Dims{1, 1, std::nullopt}, {0.0}), InputError);
}

TEST(RandomKSubmodularTest, ZeroAtomsGiveZeroTable) {
  const TablePtr t = RandomKSubmodular(Dims{2, 3, std::nullopt}, 0, 1);
  for (double v : t->values()) EXPECT_EQ(v, 0.0);
}

TEST(RandomKSubmodularTest, SeedDeterminism) {
  const Dims dims{3, 3, std::nullopt};
  const TablePtr a = RandomKSubmodular(dims, 7, 42);
  const TablePtr b = RandomKSubmodular(dims, 7, 42);
  const TablePtr c = RandomKSubmodular(dims, 7, 43);
  EXPECT_TRUE(std::equal(a->values().begin(), a->values().end(),
                         b->values().begin()));
  EXPECT_FALSE(std::equal(a->values().begin(), a->values().end(),
                          c->values().begin()));
}

TEST(RandomKSubmodularTest, OutputsAreKSubmodular) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 3; ++n) {
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const TablePtr t = RandomKSubmodular(Dims{n, k, std::nullopt}, 6, seed);
        EXPECT_TRUE(CheckKSubmodular(*t).holds) << "n=" << n << " k=" << k;
        EXPECT_TRUE(testing::NaiveIsKSubmodular(*t, kDefaultEps));
      }
    }
  }
}

TEST(RandomKSubmodularTest, CapIsEnforced) {
  EXPECT_THROW(RandomKSubmodular(Dims{9, 4, std::nullopt}, 3, 0), InputError);
  EXPECT_THROW(RandomKSubmodular(Dims{2, 2, std::nullopt}, -1, 0), InputError);
}

// Family memberships claimed for the graph objectives and tight examples.
TEST(FamilyPropertiesTest, GraphObjectives) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 3; ++n) {
    for (int k = 2; k <= 4; ++k) {
      const GraphInstance graph = RandomGraph(n, false, rng);
      const TablePtr cut = Tabulate(*MakeMaxKCut(graph, k));
      EXPECT_TRUE(CheckOrthantSubmodular(*cut).holds);
      EXPECT_TRUE(CheckKSubmodular(*Tabulate(*MakeMaxKCut(graph, 1))).holds);

      const TablePtr layer =
          Tabulate(*MakeLayerLayout(RandomGraph(n, true, rng), k));
      EXPECT_TRUE(CheckOrthantSubmodular(*layer).holds);
      EXPECT_TRUE(CheckRWiseMonotone(*layer, k).holds);
    }
  }
  EXPECT_TRUE(CheckKSubmodular(*Tabulate(*MakeLayerLayout(Edge01(true), 2))).holds);
  // With 0 read as unassigned, s = (1,1) and t = (1,2) give
  // f(s) + f(t) = 1 < 2 = f(min0) + f(max0) for every k >= 2.
  for (int k = 2; k <= 4; ++k) {
    const TablePtr cut = Tabulate(*MakeMaxKCut(Edge01(false), k));
    EXPECT_FALSE(CheckKSubmodular(*cut).holds);
    EXPECT_EQ(cut->at({1, 1}) + cut->at({1, 2}), 1.0);
    EXPECT_EQ(cut->at(Min0({1, 1}, {1, 2})) + cut->at(Max0({1, 1}, {1, 2})), 2.0);
  }
  for (int k = 3; k <= 5; ++k) {
    EXPECT_FALSE(
        CheckKSubmodular(*Tabulate(*MakeLayerLayout(Edge01(true), k))).holds);
  }
}

TEST(FamilyPropertiesTest, TightExamples) {
  for (int k = 2; k <= 5; ++k) {
    for (int r = 1; r <= k; ++r) {
      const TablePtr f = Tabulate(*MakeDetGreedyTight(k, r));
      EXPECT_TRUE(CheckOrthantSubmodular(*f).holds);
      EXPECT_TRUE(CheckRWiseMonotone(*f, r).holds);
    }
    const TablePtr coverage = Tabulate(*MakeCoverageTight(k));
    for (int r = 1; r <= k; ++r) {
      EXPECT_TRUE(CheckRWiseMonotone(*coverage, r).holds);
    }
    EXPECT_TRUE(CheckOrthantSubmodular(*coverage).holds);
  }
}

}  // namespace
}  // namespace ksub
