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

#include "bcckit/matroid.h"

#include <gtest/gtest.h>

#include "bcckit/constructions.h"
#include "bcckit/error.h"
#include "bcckit/exact_matrix.h"
#include "test_util.h"

namespace bcc {
namespace {

using testing::Canonical;
using testing::K4;
using testing::Sets;
using testing::TwoTriangles;

TEST(ElementSetTest, Basics) {
  const ElementSet s = MakeSet({1, 3, 5});
  EXPECT_EQ(Size(s), 3);
  EXPECT_TRUE(Contains(s, 3));
  EXPECT_FALSE(Contains(s, 2));
  EXPECT_EQ(MinElement(s), 1);
  EXPECT_EQ(MaxElement(s), 5);
  EXPECT_EQ(FormatSet(s), "{1,3,5}");
  EXPECT_EQ(MinimalSets({MakeSet({1, 2}), MakeSet({1, 2, 3}), MakeSet({4})}),
            Sets({{1, 2}, {4}}));
}

TEST(ElementSetTest, CompactIndexRoundTrip) {
  const CompactIndex index(MakeSet({2, 7, 9}));
  EXPECT_EQ(index.Compress(MakeSet({7, 9})), 0b110u);
  EXPECT_EQ(index.Expand(0b101u), MakeSet({2, 9}));
}

TEST(RankTest, SmallExamples) {
  EXPECT_EQ(Matroid::Uniform(2, 3).Rank(MakeSet({1, 2, 3})), 2);
  const Matroid triangle = Matroid::Graphic(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(triangle.Rank(triangle.ground()), 2);
  const Matroid linear = Matroid::Linear(
      RationalMatrix::FromColumns({{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(linear.Rank(linear.ground()), 2);
}

TEST(CircuitsTest, SmallExamples) {
  EXPECT_EQ(Matroid::Uniform(2, 3).circuits(), Sets({{1, 2, 3}}));
  EXPECT_EQ(Matroid::Uniform(2, 4).circuits(),
            Sets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(TwoTriangles().circuits(), Sets({{1, 2, 3}, {3, 4, 5}, {1, 2, 4, 5}}));
  EXPECT_EQ(K4().rank(), 3);
  EXPECT_EQ(K4().size(), 6);
}

TEST(CircuitsTest, RejectsNonMatroidFamily) {
  // {1,2} and {2,3} force a circuit inside {1,3}.
  EXPECT_THROW(Matroid::FromCircuits(MakeSet({1, 2, 3}), Sets({{1, 2}, {2, 3}})), Error);
}

TEST(MinorTest, DeleteContract) {
  EXPECT_EQ(Contract(Matroid::Uniform(2, 3), 3).circuits(), Sets({{1, 2}}));
  EXPECT_EQ(Delete(Matroid::Uniform(2, 4), 4), Matroid::Uniform(2, 3));
  for (Element e : Elements(K4().ground())) {
    const Matroid c = Contract(K4(), e);
    EXPECT_EQ(c.rank(), 2);
    EXPECT_EQ(c.size(), 5);
    const Matroid s = Simplify(c).matroid;
    EXPECT_EQ(s.size(), 3);
    EXPECT_EQ(s.circuits().size(), 1u);
  }
}

TEST(DualTest, Examples) {
  const Matroid d = Dual(Matroid::Uniform(2, 3));
  EXPECT_EQ(d.rank(), 1);
  EXPECT_EQ(d.circuits(), Sets({{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(Dual(Dual(K4())), K4());
  EXPECT_EQ(Dual(TwoTriangles()).rank(), 2);
  const Matroid coloop = Matroid::Uniform(1, 1);
  EXPECT_EQ(Loops(Dual(coloop)), coloop.ground());
}

TEST(SimplifyTest, Examples) {
  const Simplification s = Simplify(Matroid::Uniform(1, 3));
  EXPECT_EQ(s.matroid.size(), 1);
  EXPECT_EQ(Coloops(s.matroid), s.matroid.ground());
  EXPECT_EQ(s.representative.at(2), 1);
  EXPECT_EQ(s.representative.at(3), 1);
  EXPECT_EQ(Simplify(K4()).matroid, K4());
  const Matroid c = Contract(TwoTriangles(), 3);
  const Simplification sc = Simplify(c);
  EXPECT_EQ(sc.matroid.size(), 2);
  EXPECT_EQ(sc.matroid.rank(), 2);
  EXPECT_EQ(ParallelClasses(c).size(), 2u);
}

TEST(SpecialElementsTest, LoopsColoopsClasses) {
  EXPECT_EQ(Coloops(Matroid::Uniform(3, 3)), MakeSet({1, 2, 3}));
  EXPECT_EQ(Loops(Matroid::Uniform(0, 2)), MakeSet({1, 2}));
  const auto classes = ParallelClasses(Matroid::Uniform(1, 3));
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0], MakeSet({1, 2, 3}));
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(IsConnected(Matroid::Uniform(2, 3)));
  EXPECT_TRUE(IsConnected(K4()));
  const Matroid sum = DirectSum(Matroid::Uniform(2, 3), Matroid::Uniform(1, 1, 4));
  EXPECT_FALSE(IsConnected(sum));
  EXPECT_EQ(ComponentSets(sum).size(), 2u);
}

TEST(ConstructionTest, DirectSum) {
  const Matroid sum = DirectSum(Matroid::Uniform(2, 3), Matroid::Uniform(1, 1, 4));
  EXPECT_EQ(sum.rank(), 3);
  EXPECT_EQ(sum.size(), 4);
  EXPECT_EQ(sum.circuits(), Sets({{1, 2, 3}}));
}

TEST(ConstructionTest, SeriesAndParallelOfTwoElementCircuits) {
  const Matroid a = Matroid::UniformOn(1, MakeSet({1, 2}));
  const Matroid b = Matroid::UniformOn(1, MakeSet({1, 3}));
  EXPECT_EQ(SeriesConnection({a, b, 1}).circuits(), Sets({{1, 2, 3}}));
  EXPECT_EQ(ParallelConnection({a, b, 1}).circuits(), Sets({{1, 2}, {1, 3}, {2, 3}}));
}

TEST(ConstructionTest, ParallelOfTrianglesIsTwoTriangles) {
  const Matroid p = ParallelConnection(
      {Matroid::UniformOn(2, MakeSet({1, 2, 3})), Matroid::UniformOn(2, MakeSet({3, 4, 5})), 3});
  EXPECT_EQ(p.circuits(), TwoTriangles().circuits());
}

TEST(ConstructionTest, FreeExtensions) {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      const Matroid u = Matroid::Uniform(m, n);
      EXPECT_EQ(FreeExtension(u).circuits(), Matroid::Uniform(m, n + 1).circuits());
      EXPECT_EQ(FreeDualExtension(u).circuits(), Matroid::Uniform(m + 1, n + 1).circuits());
    }
  }
  EXPECT_EQ(CircuitMatroid(1).circuits(), Sets({{1, 2}}));
}

TEST(CapTest, GroundCap) {
  EXPECT_THROW(Matroid::Uniform(3, 21), Error);
  try {
    Matroid::Uniform(3, 21);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
}

TEST(ExactMatrixTest, RankAndNullspace) {
  const RationalMatrix m = RationalMatrix::FromColumns({{1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(ColumnRank(m), 2);
  EXPECT_EQ(FormatRational(ParseRational("6/4")), "3/2");
  EXPECT_EQ(Canonical(Matroid::Linear(m).circuits()), Sets({{1, 2, 3}}));
}

}  // namespace
}  // namespace bcc
