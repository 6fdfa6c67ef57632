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

#include "bcckit/orlik_terao.h"

#include <gtest/gtest.h>

#include "bcckit/classify.h"
#include "bcckit/corpus.h"
#include "bcckit/error.h"
#include "test_util.h"

namespace bcc {
namespace {

using testing::K4;
using testing::Order;
using testing::TwoTriangles;

RationalMatrix Triangle() { return RationalMatrix::FromColumns({{1, 0}, {0, 1}, {1, 1}}); }

RationalMatrix K4Incidence() {
  Graph g;
  g.vertices = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  g.labels = {1, 2, 3, 4, 5, 6};
  return IncidenceMatrix(g);
}

TEST(ArrangementTest, UnderlyingMatroids) {
  EXPECT_EQ(UnderlyingMatroid(Triangle()).circuits(), Matroid::Uniform(2, 3).circuits());
  EXPECT_EQ(UnderlyingMatroid(K4Incidence()).circuits(), K4().circuits());
  EXPECT_EQ(UnderlyingMatroid(VandermondeMatrix(2, 4)).circuits(),
            Matroid::Uniform(2, 4).circuits());
}

TEST(ArrangementTest, RejectsDegenerateInput) {
  try {
    Arrangement::FromMatrix(RationalMatrix::FromColumns({{1, 0}, {2, 0}}));
    FAIL() << "rank-deficient matrix accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
  EXPECT_THROW(Arrangement::FromMatrix(RationalMatrix::FromColumns({{1, 0}, {0, 0}, {0, 1}})),
               Error);
}

TEST(ArrangementTest, ProportionalColumnsAreMerged) {
  const auto arr = Arrangement::FromMatrix(
      RationalMatrix::FromColumns({{1, 0}, {2, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(arr.matroid().ground(), MakeSet({1, 3, 4}));
  EXPECT_FALSE(arr.notice().empty());
}

TEST(RelationTest, TriangleRelation) {
  const auto arr = Arrangement::FromMatrix(Triangle());
  const auto rel = MakeCircuitRelation(arr, MakeSet({1, 2, 3}));
  // alpha_1 + alpha_2 - alpha_3 = 0 gives x2x3 + x1x3 - x1x2.
  ASSERT_EQ(rel.coeffs.size(), 3u);
  EXPECT_EQ(rel.coeffs[0], 1);
  EXPECT_EQ(rel.coeffs[1], 1);
  EXPECT_EQ(rel.coeffs[2], -1);
  EXPECT_EQ(rel.TermMonomial(0), MakeSet({2, 3}));
  EXPECT_TRUE(RelationVanishesOnForms(arr, rel));
  EXPECT_EQ(EvaluateAtReciprocals(arr, rel, {2, 3}), 0);
  EXPECT_EQ(LeadMonomial(rel, Ordering::Natural(arr.matroid().ground())), MakeSet({2, 3}));
}

TEST(RelationTest, GenericDegreeTwo) {
  const auto arr = Arrangement::FromMatrix(VandermondeMatrix(2, 4));
  const auto rel = MakeCircuitRelation(arr, MakeSet({1, 2, 3}));
  EXPECT_EQ(rel.elements.size(), 3u);
  EXPECT_EQ(Size(rel.TermMonomial(0)), 2);
  for (const auto& c : rel.coeffs) EXPECT_NE(c, 0);
}

TEST(LeadTermTest, EveryOrderSmallArrangements) {
  for (const auto& matrix : {Triangle(), VandermondeMatrix(2, 4), K4Incidence()}) {
    const auto arr = Arrangement::FromMatrix(matrix);
    for (const auto& r : ExhaustiveOrderSearch(arr.matroid())) {
      EXPECT_TRUE(LeadTermCheck(arr, r.order));
    }
  }
}

TEST(LeadTermTest, ForwardPrecedenceDisagrees) {
  const auto arr = Arrangement::FromMatrix(Triangle());
  EXPECT_FALSE(LeadTermCheck(arr, Ordering::Natural(arr.matroid().ground()),
                             Precedence::kEarlierFirst));
}

TEST(OtVerdictTest, Examples) {
  EXPECT_EQ(OtClassification(Arrangement::FromMatrix(VandermondeMatrix(2, 4)))
                .classification.verdict,
            OtVerdict::kNeither);
  const auto k4 = OtClassification(Arrangement::FromMatrix(K4Incidence()));
  EXPECT_EQ(k4.classification.verdict, OtVerdict::kNeither);
  EXPECT_EQ(k4.classification.h_truncated, (std::vector<std::int64_t>{1, 3, 2}));
  EXPECT_EQ(OtClassification(Arrangement::FromMatrix(Triangle())).classification.verdict,
            OtVerdict::kCompleteIntersection);
  Graph g;
  g.vertices = 4;
  g.edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 0}};
  g.labels = {1, 2, 3, 4, 5};
  const auto two = OtClassification(Arrangement::FromMatrix(IncidenceMatrix(g)));
  EXPECT_EQ(two.classification.verdict, OtVerdict::kCompleteIntersection);
  ASSERT_TRUE(two.classification.ci_order.has_value());
  EXPECT_TRUE(IsCompleteIntersection(TwoTriangles(), *two.classification.ci_order));
}

}  // namespace
}  // namespace bcc
