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

#include "bcckit/invariants.h"

#include <gtest/gtest.h>

#include "bcckit/complex.h"
#include "bcckit/constructions.h"
#include "bcckit/corpus.h"
#include "bcckit/error.h"
#include "test_util.h"

namespace bcc {
namespace {

using testing::K4;
using testing::TwoTriangles;
using V = std::vector<std::int64_t>;

TEST(TutteTest, Examples) {
  EXPECT_EQ(HPolynomialTutte(Matroid::Uniform(1, 1)).coeffs, (V{0, 1}));
  EXPECT_EQ(HPolynomialTutte(Matroid::Uniform(2, 3)).coeffs, (V{0, 1, 1}));
  EXPECT_EQ(HPolynomialTutte(K4()).coeffs, (V{0, 2, 3, 1}));
  EXPECT_EQ(HPolynomialTutte(K4()).ToHVector().entries, (V{1, 3, 2, 0}));
}

TEST(TutteTest, AgreesWithComplexAndOracle) {
  for (const auto& inst : GenGraphic(5, 10)) {
    const auto& m = inst.matroid;
    EXPECT_EQ(HPolynomialTutte(m), HPolynomialFromComplex(m)) << inst.name;
    EXPECT_EQ(HPolynomialTutte(m).ToHVector().entries, OracleHVector(m)) << inst.name;
  }
}

TEST(BetaTest, Examples) {
  EXPECT_EQ(Beta(Matroid::Uniform(2, 3)), 1);
  EXPECT_EQ(Beta(K4()), 2);
  EXPECT_EQ(Beta(DirectSum(Matroid::Uniform(2, 3), Matroid::Uniform(1, 1, 4))), 0);
}

TEST(ComponentCountTest, Examples) {
  EXPECT_EQ(ComponentCountFromH(HVector{{1, 1, 0}}, 2), 1);
  EXPECT_EQ(ComponentCountFromH(HVector{{1, 1, 0, 0}}, 3), 2);
  EXPECT_THROW(ComponentCountFromH(HVector{{1}}, 0), Error);
}

TEST(HilbertTest, Examples) {
  EXPECT_TRUE(CheckHilbertIdentity({1, 3, 2}, HVector{{1, 1, 0}}, 2));
  EXPECT_TRUE(CheckHilbertIdentity({1, 1}, HVector{{1, 0}}, 1));
  EXPECT_TRUE(CheckHilbertIdentity({1, 6, 11, 6}, HVector{{1, 3, 2, 0}}, 3));
  EXPECT_FALSE(CheckHilbertIdentity({1, 6, 11, 6}, HVector{{1, 3, 1, 0}}, 3));
  EXPECT_EQ(PoincarePolynomial({1, 3, 2}), (V{1, 3, 2}));
}

TEST(DeletionContractionTest, Examples) {
  const Matroid u = Matroid::Uniform(2, 4);
  for (Element e : Elements(u.ground())) EXPECT_TRUE(DeletionContractionHCheck(u, e));
  EXPECT_TRUE(DeletionContractionHCheck(TwoTriangles(), 3));
  for (Element e : Elements(K4().ground())) EXPECT_TRUE(DeletionContractionHCheck(K4(), e));
}

TEST(DirectSumTest, HPolynomialIsProduct) {
  const Matroid a = TwoTriangles();
  const Matroid b = Matroid::Uniform(2, 4, 6);
  const auto sum = HPolynomialTutte(DirectSum(a, b)).coeffs;
  EXPECT_EQ(Trim(sum), Trim(Multiply(HPolynomialTutte(a).coeffs, HPolynomialTutte(b).coeffs)));
}

}  // namespace
}  // namespace bcc
