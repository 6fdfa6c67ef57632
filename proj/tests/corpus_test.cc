// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bcckit/corpus.h"

#include <algorithm>
#include <fstream>

#include <gtest/gtest.h>

#include "bcckit/classify.h"
#include "bcckit/invariants.h"
#include "bcckit/json_io.h"
#include "test_util.h"

namespace bcc {
namespace {

using testing::K4;
using testing::TwoTriangles;

Graph MakeGraph(int vertices, std::vector<GraphEdge> edges) {
  Graph g;
  g.vertices = vertices;
  g.edges = std::move(edges);
  for (std::size_t i = 0; i < g.edges.size(); ++i) g.labels.push_back(static_cast<Element>(i + 1));
  return g;
}

TEST(GraphEnumerationTest, MatchesAtlasCounts) {
  const Json golden = LoadJsonFile(BCCKIT_GOLDEN_DIR "/graphic_counts.json");
  for (const auto& c : golden["counts"]) {
    const int v = c["max_vertices"], e = c["max_edges"];
    EXPECT_EQ(GenGraphs(v, e).size(), c["count"].get<std::size_t>()) << v << "," << e;
  }
}

TEST(GraphEnumerationTest, SmallCases) {
  const auto three = GenGraphs(3, 3);
  ASSERT_EQ(three.size(), 2u);
  const auto four = GenGraphs(4, 6);
  EXPECT_TRUE(std::any_of(four.begin(), four.end(),
                          [](const Graph& g) { return g.edges.size() == 6; }));
}

TEST(SpRandomTest, OutputsHaveBetaOneAndReplay) {
  const auto a = GenSpRandom(30, 12, 7);
  const auto b = GenSpRandom(30, 12, 7);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].matroid, b[i].matroid);
    EXPECT_EQ(Beta(a[i].matroid), 1) << a[i].name;
    ASSERT_TRUE(a[i].trace.has_value());
    EXPECT_EQ(ReplayTrace(*a[i].trace).circuits(), a[i].matroid.circuits()) << a[i].name;
    ASSERT_TRUE(a[i].graph.has_value());
    EXPECT_EQ(Simplify(a[i].graph->ToMatroid()).matroid.size(),
              Simplify(a[i].matroid).matroid.size());
  }
}

TEST(ParallelUmTest, AlwaysDecomposable) {
  for (const auto& inst : GenParallelUm(20, 4, 3)) {
    const auto report = ClassifyMatroid(inst.matroid);
    EXPECT_TRUE(report.decomposable) << inst.name;
    EXPECT_EQ(report.verdict, OtVerdict::kCompleteIntersection) << inst.name;
  }
}

TEST(RngTest, UniformIndexInRangeAndSeeded) {
  Rng a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = UniformIndex(a, 7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, UniformIndex(b, 7));
  }
}

TEST(K4MinorTest, Examples) {
  EXPECT_FALSE(K4MinorFree(MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  for (int n = 3; n <= 7; ++n) {
    std::vector<GraphEdge> cycle;
    for (int i = 0; i < n; ++i) cycle.push_back({i, (i + 1) % n});
    const Graph g = MakeGraph(n, cycle);
    EXPECT_TRUE(K4MinorFree(g));
    EXPECT_TRUE(SeriesParallelTrace(g).has_value());
  }
  const Graph two = MakeGraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(K4MinorFree(two));
  // Subdivided K4 still has the minor.
  EXPECT_FALSE(K4MinorFree(MakeGraph(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
}

TEST(OracleTest, CiOrders) {
  EXPECT_TRUE(OracleCiOrders(K4()).empty());
  const auto orders = OracleCiOrders(TwoTriangles());
  ASSERT_FALSE(orders.empty());
  const auto synthesized = SynthesizeCiOrder(TwoTriangles());
  ASSERT_TRUE(synthesized.has_value());
  EXPECT_NE(std::find(orders.begin(), orders.end(), *synthesized), orders.end());
}

TEST(OracleTest, HVectorOnUniform) {
  for (const auto& inst : GenUniform(8)) {
    EXPECT_EQ(OracleHVector(inst.matroid), HPolynomialTutte(inst.matroid).ToHVector().entries)
        << inst.name;
  }
}

TEST(OrdersForTest, BudgetShape) {
  Rng rng(1);
  OrderBudget budget;
  EXPECT_EQ(OrdersFor(MakeSet({1, 2, 3, 4}), budget, rng).size(), 24u);
  const auto sampled = OrdersFor(MakeSet({1, 2, 3, 4, 5, 6, 7, 8, 9}), budget, rng);
  EXPECT_EQ(sampled.size(), static_cast<std::size_t>(budget.samples));
  EXPECT_EQ(sampled.front(), Ordering::Natural(MakeSet({1, 2, 3, 4, 5, 6, 7, 8, 9})));
  EXPECT_TRUE(OrdersFor(MakeSet({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), budget, rng).empty());
}

}  // namespace
}  // namespace bcc
