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

#ifndef BCCKIT_CONSTRUCTIONS_H_
#define BCCKIT_CONSTRUCTIONS_H_

#include "bcckit/matroid.h"

namespace bcc {

// Two matroids glued along one shared element. The caller aligns ids: the
// ground sets must meet exactly in {basepoint}.
struct ConnectionSpec {
  Matroid left;
  Matroid right;
  Element basepoint;
};

Matroid DirectSum(const Matroid& a, const Matroid& b);

// Circuits: C(L-e) u C(R-e) u {C1 u C2 : e in C1, e in C2}.
Matroid SeriesConnection(const ConnectionSpec& spec);
// Circuits: C(L) u C(R) u {C1 u C2 - e : e in C1, e in C2}.
Matroid ParallelConnection(const ConnectionSpec& spec);

// Adds element max(ground) + 1 in general position (same rank).
Matroid FreeExtension(const Matroid& m);
// Dual of the free extension of the dual; the new element is
// max(ground) + 1.
Matroid FreeDualExtension(const Matroid& m);

// C_{m+1} = U_{m,m+1}.
Matroid CircuitMatroid(int m, Element first = 1);

}  // namespace bcc

#endif  // BCCKIT_CONSTRUCTIONS_H_
