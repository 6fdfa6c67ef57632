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

#include <bit>

#include "bcckit/kernels.h"

namespace bcc::kernels::scalar {

namespace {

bool IsFree(std::uint32_t s, std::span<const std::uint32_t> blockers) {
  for (std::uint32_t b : blockers) {
    if ((s & b) == b) return false;
  }
  return true;
}

}  // namespace

void CountFreeBySize(int n, std::span<const std::uint32_t> blockers,
                     std::span<std::uint64_t> counts) {
  for (auto& c : counts) c = 0;
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < end; ++s) {
    if (IsFree(s, blockers)) ++counts[std::popcount(s)];
  }
}

void MarkFree(int n, std::span<const std::uint32_t> blockers,
              std::span<std::uint64_t> bitmap) {
  const std::size_t words = BitmapWords(n);
  for (std::size_t w = 0; w < words; ++w) bitmap[w] = 0;
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < end; ++s) {
    if (IsFree(s, blockers)) bitmap[s >> 6] |= std::uint64_t{1} << (s & 63);
  }
}

}  // namespace bcc::kernels::scalar
