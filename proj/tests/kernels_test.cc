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

#include "bcckit/kernels.h"

#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace bcc::kernels {
namespace {

std::vector<std::uint32_t> RandomBlockers(std::mt19937_64& rng, int n, int count) {
  std::vector<std::uint32_t> out;
  const std::uint32_t mask = (n >= 32) ? ~0u : ((1u << n) - 1);
  for (int i = 0; i < count; ++i) {
    std::uint32_t b = 0;
    // Blockers of two to four bits, like minimal broken circuits.
    const int bits = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j < bits; ++j) b |= 1u << (rng() % n);
    out.push_back(b & mask);
  }
  return out;
}

TEST(ScalarKernelTest, SmallCounts) {
  // Subsets of {0,1,2} avoiding {1,2}: sizes 1, 3, 2, 0.
  std::vector<std::uint64_t> counts(4);
  const std::vector<std::uint32_t> blockers{0b110};
  scalar::CountFreeBySize(3, blockers, counts);
  EXPECT_EQ(counts, (std::vector<std::uint64_t>{1, 3, 2, 0}));
  std::vector<std::uint64_t> bitmap(BitmapWords(3));
  scalar::MarkFree(3, blockers, bitmap);
  EXPECT_EQ(bitmap[0], 0b00111111u);
}

#ifdef BCCKIT_HAVE_AVX2_KERNELS
TEST(Avx2KernelTest, MatchesScalar) {
  if (!Avx2Supported()) GTEST_SKIP() << "CPU lacks AVX2";
  std::mt19937_64 rng(42);
  for (int n = 0; n <= 18; ++n) {
    for (int count : {0, 1, 3, 8, 20}) {
      const auto blockers = n == 0 ? std::vector<std::uint32_t>{} : RandomBlockers(rng, n, count);
      std::vector<std::uint64_t> a(n + 1), b(n + 1);
      scalar::CountFreeBySize(n, blockers, a);
      avx2::CountFreeBySize(n, blockers, b);
      EXPECT_EQ(a, b) << "n=" << n << " blockers=" << count;
      std::vector<std::uint64_t> ma(BitmapWords(n)), mb(BitmapWords(n));
      scalar::MarkFree(n, blockers, ma);
      avx2::MarkFree(n, blockers, mb);
      EXPECT_EQ(ma, mb) << "n=" << n << " blockers=" << count;
    }
  }
}
#endif

TEST(DispatchTest, BackendIsNamed) {
  const auto name = BackendName(ActiveBackend());
  EXPECT_TRUE(name == "scalar" || name == "avx2");
}

}  // namespace
}  // namespace bcc::kernels
