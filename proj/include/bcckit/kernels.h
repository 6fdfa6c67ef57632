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

#ifndef BCCKIT_KERNELS_H_
#define BCCKIT_KERNELS_H_

#include <cstdint>
#include <span>
#include <string_view>

// Subset-filter kernels. A subset of {0,...,n-1} is identified with its
// bitmask; it is "free" when it contains none of the blocker masks. Every
// downward-closed family the library builds (independence complexes, broken
// circuit complexes) is the set of free subsets for some blocker list, so
// these loops carry most of the exhaustive sweeps.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2
// variant selected at runtime. Both must produce identical output.
namespace bcc::kernels {

inline constexpr int kMaxKernelBits = 24;

enum class Backend { kScalar, kAvx2 };

// Backend used by the dispatching entry points. AVX2 is chosen when the CPU
// supports it unless BCCKIT_KERNEL=scalar is set in the environment.
Backend ActiveBackend();
std::string_view BackendName(Backend backend);
bool Avx2Supported();

// counts.size() must be n + 1; counts[k] receives the number of free
// subsets of cardinality k.
void CountFreeBySize(int n, std::span<const std::uint32_t> blockers,
                     std::span<std::uint64_t> counts);

// bitmap must hold at least 2^n bits (rounded up to whole words); bit s is
// set iff subset s is free.
void MarkFree(int n, std::span<const std::uint32_t> blockers,
              std::span<std::uint64_t> bitmap);

inline std::size_t BitmapWords(int n) {
  return ((std::size_t{1} << n) + 63) / 64;
}

namespace scalar {
void CountFreeBySize(int n, std::span<const std::uint32_t> blockers,
                     std::span<std::uint64_t> counts);
void MarkFree(int n, std::span<const std::uint32_t> blockers,
              std::span<std::uint64_t> bitmap);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define BCCKIT_HAVE_AVX2_KERNELS 1
namespace avx2 {
// Callers must check Avx2Supported() first.
void CountFreeBySize(int n, std::span<const std::uint32_t> blockers,
                     std::span<std::uint64_t> counts);
void MarkFree(int n, std::span<const std::uint32_t> blockers,
              std::span<std::uint64_t> bitmap);
}  // namespace avx2
#endif

}  // namespace bcc::kernels

#endif  // BCCKIT_KERNELS_H_
