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

// Runs the property suite over the default corpus and prints one PASS/FAIL
// line per acceptance criterion. Exit status is nonzero if any line fails.

#include <cstdio>
#include <string>
#include <vector>

#include "bcckit/corpus.h"
#include "bcckit/kernels.h"
#include "bcckit/suite.h"

namespace {

struct Requirement {
  int criterion;
  double max_seconds;  // 0 for no limit
  // Minimum values for counters; the check must also have run something.
  std::vector<std::pair<std::string, std::int64_t>> minimums;
};

std::int64_t Counter(const bcc::SuiteCheck& c, const std::string& key) {
  auto it = c.counters.find(key);
  return it == c.counters.end() ? 0 : it->second;
}

}  // namespace

int main() {
  const std::vector<Requirement> requirements = {
      {1, 120, {{"exhaustive_instances", 1}, {"sampled_instances", 1}}},
      {2, 60, {}},
      {3, 0, {{"direct_sums", 100}, {"recurrence", 1}, {"partial_sums", 1}}},
      {4, 0, {{"pairs", 10000}}},
      {5, 300, {{"exhaustive", 1}}},
      {6, 0, {}},
      {7, 0, {{"one_dim_links", 1}}},
      {8, 0, {{"pairs", 1}}},
      {9, 0, {{"direct_sums", 100}, {"parallel_connections", 100}}},
      {10, 0, {}},
      {11, 0, {{"series_parallel", 1}, {"not_series_parallel", 1}}},
  };

  std::printf("subset kernel: %s\n",
              std::string(bcc::kernels::BackendName(bcc::kernels::ActiveBackend())).c_str());
  const bcc::SuiteReport report = bcc::RunSuite(bcc::CorpusSpec::Default(), {});
  bool all = true;
  for (const auto& req : requirements) {
    const bcc::SuiteCheck* check = report.Find(req.criterion);
    std::string why;
    if (check == nullptr) {
      why = "not run";
    } else {
      if (!check->passed()) why += std::to_string(check->failure_count) + " failures; ";
      if (check->instances == 0) why += "no instances; ";
      if (req.criterion == 6 && check->instances < 10) why += "fewer than 10 arrangements; ";
      for (const auto& [key, min] : req.minimums) {
        if (Counter(*check, key) < min) {
          why += key + "=" + std::to_string(Counter(*check, key)) + " < " +
                 std::to_string(min) + "; ";
        }
      }
      if (req.max_seconds > 0 && check->seconds >= req.max_seconds) {
        why += "took " + std::to_string(check->seconds) + " s; ";
      }
    }
    const bool ok = why.empty();
    all = all && ok;
    std::printf("%s criterion %d %s: instances=%lld checks=%lld time=%.2fs%s%s\n",
                ok ? "PASS" : "FAIL", req.criterion, check ? check->name.c_str() : "?",
                check ? static_cast<long long>(check->instances) : 0LL,
                check ? static_cast<long long>(check->checks) : 0LL,
                check ? check->seconds : 0.0, ok ? "" : "  ", why.c_str());
  }
  const bcc::SuiteCheck* support = report.Find(0);
  if (support != nullptr) {
    std::printf("%s supporting %s: instances=%lld checks=%lld\n",
                support->passed() ? "PASS" : "FAIL", support->name.c_str(),
                static_cast<long long>(support->instances),
                static_cast<long long>(support->checks));
    all = all && support->passed();
  }
  if (!all) std::printf("%s", report.ToText(true).c_str());
  return all ? 0 : 1;
}
