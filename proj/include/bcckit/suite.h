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

#ifndef BCCKIT_SUITE_H_
#define BCCKIT_SUITE_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bcckit/corpus.h"
#include "bcckit/json_io.h"

namespace bcc {

CorpusSpec CorpusSpecFromJson(const Json& j);
Json CorpusSpecToJson(const CorpusSpec& spec);

struct SuiteOptions {
  int jobs = 0;               // 0: hardware concurrency
  bool inject_fault = false;  // corrupt one comparison to exercise reporting
  std::set<int> only;         // empty: every check
};

struct Failure {
  std::string detail;
  Json instance;  // family, name, matroid JSON, and the order when relevant
};

struct SuiteCheck {
  int criterion = 0;  // 0 for the supporting identities
  std::string name;
  std::string description;
  std::int64_t instances = 0;
  std::int64_t checks = 0;
  std::int64_t failure_count = 0;
  std::vector<Failure> failures;  // the first few, in corpus order
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return failure_count == 0; }
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;

  bool passed() const;
  const SuiteCheck* Find(int criterion) const;
  // Timings are left out unless asked for, so that reports for the same
  // spec and seed are byte-identical.
  Json ToJson(bool with_timing = false) const;
  std::string ToText(bool with_timing = false) const;
};

// Numbers and names of the checks, in run order.
std::vector<std::pair<int, std::string>> SuiteCheckNames();

SuiteReport RunSuite(const CorpusSpec& spec, const SuiteOptions& options);

}  // namespace bcc

#endif  // BCCKIT_SUITE_H_
