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

#include <cstdlib>
#include <string>

#include "bcckit/error.h"
#include "bcckit/kernels.h"

namespace bcc::kernels {

namespace {

Backend DetectBackend() {
  const char* forced = std::getenv("BCCKIT_KERNEL");
  if (forced != nullptr && std::string(forced) == "scalar") {
    return Backend::kScalar;
  }
  return Avx2Supported() ? Backend::kAvx2 : Backend::kScalar;
}

void CheckBits(int n) {
  if (n < 0 || n > kMaxKernelBits) {
    Fail(ErrorKind::kCapExceeded,
         "subset kernel limited to " + std::to_string(kMaxKernelBits) +
             " positions, got " + std::to_string(n));
  }
}

}  // namespace

bool Avx2Supported() {
#ifdef BCCKIT_HAVE_AVX2_KERNELS
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

Backend ActiveBackend() {
  static const Backend backend = DetectBackend();
  return backend;
}

std::string_view BackendName(Backend backend) {
  return backend == Backend::kAvx2 ? "avx2" : "scalar";
}

void CountFreeBySize(int n, std::span<const std::uint32_t> blockers,
                     std::span<std::uint64_t> counts) {
  CheckBits(n);
  Require(counts.size() == static_cast<std::size_t>(n) + 1,
          "count buffer must have n + 1 entries");
#ifdef BCCKIT_HAVE_AVX2_KERNELS
  if (ActiveBackend() == Backend::kAvx2) {
    avx2::CountFreeBySize(n, blockers, counts);
    return;
  }
#endif
  scalar::CountFreeBySize(n, blockers, counts);
}

void MarkFree(int n, std::span<const std::uint32_t> blockers,
              std::span<std::uint64_t> bitmap) {
  CheckBits(n);
  Require(bitmap.size() >= BitmapWords(n), "bitmap too small");
#ifdef BCCKIT_HAVE_AVX2_KERNELS
  if (ActiveBackend() == Backend::kAvx2) {
    avx2::MarkFree(n, blockers, bitmap);
    return;
  }
#endif
  scalar::MarkFree(n, blockers, bitmap);
}

}  // namespace bcc::kernels
