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

#include "bcckit/suite.h"

#include <gtest/gtest.h>

#include "bcckit/error.h"
#include "bcckit/json_io.h"

namespace bcc {
namespace {

CorpusSpec Small() {
  CorpusSpec spec;
  spec.graphs = GraphFamily{4, 6};
  spec.uniform = UniformFamily{5};
  spec.sp_random = SpRandomFamily{5, 8, 3};
  spec.parallel_um = ParallelUmFamily{5, 3, 3};
  return spec;
}

TEST(SuiteTest, SmallCorpusPasses) {
  const SuiteReport report = RunSuite(Small(), {});
  EXPECT_TRUE(report.passed()) << report.ToText();
  EXPECT_EQ(report.checks.size(), 12u);
  for (const auto& c : report.checks) EXPECT_GT(c.instances, 0) << c.name;
}

TEST(SuiteTest, UniformOnlyIdentities) {
  CorpusSpec spec;
  spec.uniform = UniformFamily{6};
  SuiteOptions options;
  options.only = {0, 3};
  const SuiteReport report = RunSuite(spec, options);
  ASSERT_NE(report.Find(3), nullptr);
  EXPECT_TRUE(report.passed()) << report.ToText();
  EXPECT_EQ(report.Find(1), nullptr);
}

TEST(SuiteTest, InjectedFaultIsReportedWithReplay) {
  SuiteOptions options;
  options.inject_fault = true;
  options.only = {2};
  const SuiteReport report = RunSuite(Small(), options);
  ASSERT_NE(report.Find(2), nullptr);
  const SuiteCheck& check = *report.Find(2);
  EXPECT_FALSE(check.passed());
  ASSERT_FALSE(check.failures.empty());
  const Json& instance = check.failures[0].instance;
  ASSERT_TRUE(instance.contains("matroid"));
  EXPECT_NO_THROW(MatroidFromJson(instance["matroid"]));
}

TEST(SuiteTest, ParallelMatchesSerial) {
  SuiteOptions one, four;
  one.jobs = 1;
  four.jobs = 4;
  EXPECT_EQ(RunSuite(Small(), one).ToJson(), RunSuite(Small(), four).ToJson());
}

TEST(CorpusSpecTest, JsonRoundTripAndErrors) {
  const CorpusSpec spec = CorpusSpec::Default();
  EXPECT_EQ(CorpusSpecToJson(CorpusSpecFromJson(CorpusSpecToJson(spec))), CorpusSpecToJson(spec));
  try {
    CorpusSpecFromJson(Json::parse(R"({"bogus": 1})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSchema);
  }
  try {
    CorpusSpecFromJson(Json::parse(R"({"graphs": {"max_vertices": 9, "max_edges": 10}})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
}

}  // namespace
}  // namespace bcc
