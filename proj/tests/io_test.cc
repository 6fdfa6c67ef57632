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

#include <gtest/gtest.h>

#include "bcckit/classify.h"
#include "bcckit/constructions.h"
#include "bcckit/error.h"
#include "bcckit/expression.h"
#include "bcckit/json_io.h"
#include "test_util.h"

namespace bcc {
namespace {

using testing::Sets;
using testing::TwoTriangles;

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kPrecondition;
}

TEST(JsonTest, ReadsEveryRepresentation) {
  EXPECT_EQ(MatroidFromJson(Json::parse(R"({"type":"uniform","m":2,"n":4})")),
            Matroid::Uniform(2, 4));
  const Matroid g = MatroidFromJson(Json::parse(
      R"({"type":"graphic","vertices":4,"edges":[[0,1],[1,2],[0,2],[2,3],[3,0]]})"));
  EXPECT_EQ(g.circuits(), TwoTriangles().circuits());
  const Matroid l = MatroidFromJson(
      Json::parse(R"({"type":"linear","matrix":[[1,0],[0,1],["1/2","1/2"]]})"));
  EXPECT_EQ(l.circuits(), Sets({{1, 2, 3}}));
  const Matroid c = MatroidFromJson(
      Json::parse(R"({"type":"circuits","n":3,"circuits":[[0,1,2]]})"));
  EXPECT_EQ(c.circuits(), Sets({{0, 1, 2}}));
}

TEST(JsonTest, RoundTrip) {
  for (const Matroid& m : {Matroid::Uniform(2, 5), TwoTriangles(),
                           ParallelConnection({Matroid::UniformOn(2, MakeSet({1, 2, 3})),
                                               Matroid::UniformOn(3, MakeSet({3, 4, 5, 6})), 3})}) {
    EXPECT_EQ(MatroidFromJson(MatroidToJson(m)), m);
  }
}

TEST(JsonTest, SchemaErrors) {
  EXPECT_EQ(KindOf([] { MatroidFromJson(Json::parse(R"({"type":"nope"})")); }),
            ErrorKind::kSchema);
  EXPECT_EQ(KindOf([] { MatroidFromJson(Json::parse(R"({"type":"uniform","m":2})")); }),
            ErrorKind::kSchema);
  EXPECT_EQ(KindOf([] {
              MatroidFromJson(Json::parse(R"({"type":"circuits","n":3,"circuits":[[0,1],[1,2]]})"));
            }),
            ErrorKind::kSchema);
  EXPECT_EQ(KindOf([] { MatroidFromJson(Json::parse(R"({"type":"uniform","m":2,"n":25})")); }),
            ErrorKind::kCapExceeded);
}

TEST(JsonTest, ReportFields) {
  const Json j = ReportToJson(ClassifyMatroid(TwoTriangles()));
  EXPECT_EQ(j["h"], Json::parse("[1,2,1]"));
  EXPECT_EQ(j["verdict"], "complete_intersection");
  EXPECT_FALSE(j["ci_order"].is_null());
}

TEST(ExpressionTest, Constructions) {
  EXPECT_EQ(ParseExpression("U(2,3)"), Matroid::Uniform(2, 3));
  EXPECT_EQ(ParseExpression("P(U(2,3),U(2,3);3)").circuits(), TwoTriangles().circuits());
  EXPECT_EQ(ParseExpression("S(U(1,2),U(1,2);1)").circuits(), Sets({{1, 2, 3}}));
  const Matroid sum = ParseExpression("sum(U(2,3), U(1,1))");
  EXPECT_EQ(sum.size(), 4);
  EXPECT_EQ(sum.rank(), 3);
  EXPECT_EQ(ParseExpression(" P( P(U(2,3),U(2,3);3) , U(3,4) ; 5 ) ").size(), 8);
}

TEST(ExpressionTest, Errors) {
  EXPECT_EQ(KindOf([] { ParseExpression("U(2,"); }), ErrorKind::kSchema);
  EXPECT_EQ(KindOf([] { ParseExpression("X(1)"); }), ErrorKind::kSchema);
  EXPECT_EQ(KindOf([] { ParseExpression("U(2,3) junk"); }), ErrorKind::kSchema);
  EXPECT_EQ(KindOf([] { ParseExpression("U(4,3)"); }), ErrorKind::kPrecondition);
  EXPECT_EQ(KindOf([] { ParseExpression("P(U(2,3),U(2,3);9)"); }), ErrorKind::kPrecondition);
}

}  // namespace
}  // namespace bcc
