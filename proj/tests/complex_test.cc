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

#include "bcckit/complex.h"

#include <gtest/gtest.h>

#include "bcckit/classify.h"
#include "bcckit/constructions.h"
#include "bcckit/corpus.h"
#include "bcckit/error.h"
#include "bcckit/invariants.h"
#include "test_util.h"

namespace bcc {
namespace {

using testing::K4;
using testing::Order;
using testing::Sets;
using testing::TwoTriangles;

SimplicialComplex Cycle(int n) {
  std::vector<ElementSet> facets;
  for (int i = 0; i < n; ++i) facets.push_back(MakeSet({i + 1, (i + 1) % n + 1}));
  return SimplicialComplex::FromFacets(facets);
}

TEST(BrokenCircuitTest, Triangle) {
  const Matroid u = Matroid::Uniform(2, 3);
  EXPECT_EQ(BrokenCircuits(u, Ordering::Natural(u.ground())), Sets({{2, 3}}));
}

TEST(BrokenCircuitTest, TwoTriangles) {
  const Matroid m = TwoTriangles();
  const Ordering natural = Ordering::Natural(m.ground());
  EXPECT_EQ(BrokenCircuits(m, natural), Sets({{2, 3}, {4, 5}, {2, 4, 5}}));
  EXPECT_EQ(MinimalBrokenCircuits(m, natural), Sets({{2, 3}, {4, 5}}));
  const auto overlapping = MinimalBrokenCircuits(m, Order(m.ground(), {1, 4, 2, 3, 5}));
  EXPECT_NE(std::find(overlapping.begin(), overlapping.end(), MakeSet({2, 3})),
            overlapping.end());
  EXPECT_NE(std::find(overlapping.begin(), overlapping.end(), MakeSet({3, 5})),
            overlapping.end());
}

TEST(BcComplexTest, Triangle) {
  const Matroid u = Matroid::Uniform(2, 3);
  const auto bc = BcComplex(u, Ordering::Natural(u.ground()));
  EXPECT_EQ(bc.facets(), Sets({{1, 2}, {1, 3}}));
  EXPECT_EQ(FVectorOf(bc), (std::vector<std::int64_t>{1, 3, 2}));
  EXPECT_EQ(HVectorOf(bc).entries, (std::vector<std::int64_t>{1, 1, 0}));
  EXPECT_EQ(MinimalNonfaces(bc, u.ground()), Sets({{2, 3}}));
  EXPECT_EQ(Link(bc, MakeSet({1})).faces(), Sets({{}, {2}, {3}}));
  EXPECT_EQ(Link(bc, 0), bc);
}

TEST(BcComplexTest, UniformTwoFour) {
  const Matroid u = Matroid::Uniform(2, 4);
  EXPECT_EQ(HVectorOf(BcComplex(u, Ordering::Natural(u.ground()))).entries,
            (std::vector<std::int64_t>{1, 2, 0}));
}

TEST(BcComplexTest, ReducedOfFreeDualExtensionIsMatroidComplex) {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      const Matroid u = Matroid::Uniform(m, n);
      const Matroid ext = FreeDualExtension(u);
      EXPECT_EQ(ext.circuits(), Matroid::Uniform(m + 1, n + 1).circuits());
      // The new element n + 1 goes first.
      std::vector<Element> seq{n + 1};
      for (Element e : Elements(u.ground())) seq.push_back(e);
      EXPECT_TRUE(ReducedBcComplex(ext, Order(ext.ground(), seq)) == MatroidComplex(u))
          << m << "," << n;
    }
  }
}

TEST(ComplexTest, CycleAndSimplex) {
  const auto square = Cycle(4);
  EXPECT_EQ(FVectorOf(square), (std::vector<std::int64_t>{1, 4, 4}));
  EXPECT_EQ(ReducedEuler(square), -1);
  const auto simplex = SimplicialComplex::FromFacets({MakeSet({1, 2, 3})});
  EXPECT_TRUE(MinimalNonfaces(simplex).empty());
}

TEST(ComplexTest, CoreOfConeDropsApex) {
  const auto cone = SimplicialComplex::FromFacets({MakeSet({1, 2, 9}), MakeSet({2, 3, 9})});
  EXPECT_EQ(ConePoints(cone), MakeSet({2, 9}));
  EXPECT_FALSE(Contains(Core(cone).vertices(), 9));
}

TEST(ComplexTest, MinimalNonfacesEqualMinimalBrokenCircuitsOnCorpus) {
  for (const auto& inst : GenGraphic(5, 8)) {
    const Ordering ord = Ordering::Natural(inst.matroid.ground());
    EXPECT_EQ(MinimalNonfaces(BcComplex(inst.matroid, ord), inst.matroid.ground()),
              MinimalBrokenCircuits(inst.matroid, ord))
        << inst.name;
  }
}

TEST(ComplexTest, DimensionIsRankMinusOne) {
  for (const auto& inst : GenUniform(7)) {
    const auto bc = BcComplex(inst.matroid, Ordering::Natural(inst.matroid.ground()));
    EXPECT_EQ(bc.dimension(), inst.matroid.rank() - 1) << inst.name;
  }
}

TEST(LinkShapeTest, Examples) {
  EXPECT_EQ(ClassifyLinkShape(Cycle(4)), (LinkShape{LinkShape::Kind::kNGon, 4}));
  const auto path = SimplicialComplex::FromFacets({MakeSet({1, 2}), MakeSet({2, 3})});
  EXPECT_EQ(ClassifyLinkShape(path), (LinkShape{LinkShape::Kind::kPath, 3}));
  const auto two_edges = SimplicialComplex::FromFacets({MakeSet({1, 2}), MakeSet({3, 4})});
  EXPECT_EQ(ClassifyLinkShape(two_edges).kind, LinkShape::Kind::kOther);
}

TEST(CompleteIntersectionTest, Examples) {
  const Matroid m = TwoTriangles();
  EXPECT_TRUE(IsCompleteIntersection(m, Ordering::Natural(m.ground())));
  EXPECT_FALSE(IsCompleteIntersection(m, Order(m.ground(), {1, 4, 2, 3, 5})));
  const Matroid u = Matroid::Uniform(2, 4);
  for (const auto& r : ExhaustiveOrderSearch(u)) EXPECT_FALSE(r.complete_intersection);
}

TEST(GorensteinShapeTest, Examples) {
  const Matroid m = TwoTriangles();
  EXPECT_TRUE(GorensteinShape(BcComplex(m, Ordering::Natural(m.ground())), true));
  const Matroid u = Matroid::Uniform(2, 4);
  EXPECT_FALSE(GorensteinShape(BcComplex(u, Ordering::Natural(u.ground())), true));
  EXPECT_TRUE(GorensteinShape(SimplicialComplex::FromFacets({MakeSet({1})}), true));
  EXPECT_THROW(GorensteinShape(Cycle(4), false), Error);
}

TEST(PanelTest, Examples) {
  const Matroid m = TwoTriangles();
  EXPECT_EQ(BcPanel(m, Ordering::Natural(m.ground())).ToString(), "(T,T,T,T,T,T)");
  const Matroid u = Matroid::Uniform(2, 4);
  EXPECT_EQ(BcPanel(u, Ordering::Natural(u.ground())).ToString(), "(F,F,F,F,F,F)");
}

TEST(HVectorShapeTest, Examples) {
  const std::vector<std::int64_t> a{1, 2, 1}, b{1, 3, 2}, c{1};
  EXPECT_TRUE(DehnSommerville(a));
  EXPECT_TRUE(LastTwoSymmetric(a));
  EXPECT_FALSE(DehnSommerville(b));
  EXPECT_FALSE(LastTwoSymmetric(b));
  EXPECT_TRUE(DehnSommerville(c));
  EXPECT_TRUE(LastTwoSymmetric(c));
}

TEST(DecompositionTest, Examples) {
  const auto tree = ParallelDecompose(TwoTriangles());
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->kind, DecompositionTree::Kind::kParallel);
  EXPECT_EQ(tree->basepoint, 3);
  EXPECT_EQ(tree->Leaves(), (std::vector<ElementSet>{MakeSet({1, 2, 3}), MakeSet({3, 4, 5})}));
  EXPECT_EQ(Realize(*tree), TwoTriangles());
  for (int m = 2; m <= 5; ++m) {
    const auto leaf = ParallelDecompose(CircuitMatroid(m));
    ASSERT_TRUE(leaf.has_value());
    EXPECT_EQ(leaf->kind, DecompositionTree::Kind::kLeaf);
  }
  EXPECT_FALSE(ParallelDecompose(K4()).has_value());
}

TEST(OrderSynthesisTest, Examples) {
  const Matroid m = TwoTriangles();
  const auto ord = SynthesizeCiOrder(m);
  ASSERT_TRUE(ord.has_value());
  EXPECT_TRUE(IsCompleteIntersection(m, *ord));
  EXPECT_LT(ord->position(3), ord->position(4));
  EXPECT_LT(ord->position(3), ord->position(5));
  const Matroid sum = DirectSum(Matroid::Uniform(2, 3), Matroid::Uniform(1, 1, 4));
  const auto sum_ord = SynthesizeCiOrder(sum);
  ASSERT_TRUE(sum_ord.has_value());
  EXPECT_TRUE(IsCompleteIntersection(sum, *sum_ord));
  EXPECT_TRUE(IsCompleteIntersection(sum, Ordering::Natural(sum.ground())));
  EXPECT_FALSE(SynthesizeCiOrder(K4()).has_value());
}

TEST(ClassifyTest, Anchors) {
  const auto two = ClassifyMatroid(TwoTriangles());
  EXPECT_EQ(two.verdict, OtVerdict::kCompleteIntersection);
  EXPECT_EQ(two.h_truncated, (std::vector<std::int64_t>{1, 2, 1}));
  const auto k4 = ClassifyMatroid(K4(), true);
  EXPECT_EQ(k4.verdict, OtVerdict::kNeither);
  EXPECT_EQ(k4.h_truncated, (std::vector<std::int64_t>{1, 3, 2}));
  ASSERT_TRUE(k4.per_order_results.has_value());
  EXPECT_EQ(k4.per_order_results->size(), 720u);
  for (const auto& r : *k4.per_order_results) EXPECT_FALSE(r.complete_intersection);
  for (int m = 1; m <= 5; ++m) {
    const auto c = ClassifyMatroid(CircuitMatroid(m));
    EXPECT_EQ(c.verdict, OtVerdict::kCompleteIntersection);
    EXPECT_EQ(c.h_truncated, std::vector<std::int64_t>(m, 1));
  }
}

}  // namespace
}  // namespace bcc
