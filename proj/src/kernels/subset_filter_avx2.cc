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

#include <immintrin.h>

#include <array>
#include <bit>
#include <vector>

#include "bcckit/kernels.h"

// Compiled with -mavx2; only reached after a runtime CPU check.
namespace bcc::kernels::avx2 {

namespace {

// Eight consecutive subsets base|0 .. base|7 share the high bits, so the
// cardinality of base|lane is popcount(base) + popcount(lane). For every
// 8-bit lane mask, kLaneHistogram[mask][k] counts selected lanes with k low
// bits set.
constexpr std::array<std::array<std::uint8_t, 4>, 256> MakeLaneHistogram() {
  std::array<std::array<std::uint8_t, 4>, 256> table{};
  for (int mask = 0; mask < 256; ++mask) {
    for (int lane = 0; lane < 8; ++lane) {
      if (mask & (1 << lane)) ++table[mask][std::popcount(unsigned(lane))];
    }
  }
  return table;
}
constexpr auto kLaneHistogram = MakeLaneHistogram();

// Returns an 8-bit mask of free lanes among base|0 .. base|7.
inline unsigned FreeLanes(std::uint32_t base,
                          std::span<const std::uint32_t> blockers) {
  const __m256i lanes = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i s =
      _mm256_or_si256(_mm256_set1_epi32(static_cast<int>(base)), lanes);
  const __m256i ones = _mm256_set1_epi32(-1);
  __m256i hit = _mm256_setzero_si256();
  for (std::size_t i = 0; i < blockers.size(); ++i) {
    const __m256i b = _mm256_set1_epi32(static_cast<int>(blockers[i]));
    hit = _mm256_or_si256(hit, _mm256_cmpeq_epi32(_mm256_and_si256(s, b), b));
    if ((i & 7) == 7 && _mm256_testc_si256(hit, ones)) return 0;
  }
  return ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit))) &
         0xFFu;
}

}  // namespace

void CountFreeBySize(int n, std::span<const std::uint32_t> blockers,
                     std::span<std::uint64_t> counts) {
  if (n < 3) {
    scalar::CountFreeBySize(n, blockers, counts);
    return;
  }
  for (auto& c : counts) c = 0;
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::uint32_t base = 0; base < end; base += 8) {
    const unsigned free = FreeLanes(base, blockers);
    if (free == 0) continue;
    const int high = std::popcount(base);
    const auto& hist = kLaneHistogram[free];
    for (int k = 0; k < 4; ++k) counts[high + k] += hist[k];
  }
}

void MarkFree(int n, std::span<const std::uint32_t> blockers,
              std::span<std::uint64_t> bitmap) {
  if (n < 3) {
    scalar::MarkFree(n, blockers, bitmap);
    return;
  }
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::size_t w = 0; w < BitmapWords(n); ++w) bitmap[w] = 0;
  for (std::uint32_t base = 0; base < end; base += 8) {
    const std::uint64_t free = FreeLanes(base, blockers);
    bitmap[base >> 6] |= free << (base & 63);
  }
}

}  // namespace bcc::kernels::avx2
