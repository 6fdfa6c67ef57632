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

#ifndef BCCKIT_INVARIANTS_H_
#define BCCKIT_INVARIANTS_H_

#include <cstdint>
#include <vector>

#include "bcckit/complex.h"
#include "bcckit/matroid.h"

namespace bcc {

// Integer polynomial, coefficient of t^k at index k.
using IntPolynomial = std::vector<std::int64_t>;

IntPolynomial Add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial Multiply(const IntPolynomial& a, const IntPolynomial& b);
// Drops high-degree zero coefficients, keeping at least one entry.
IntPolynomial Trim(IntPolynomial p);

// h_M(t) = h_0 t^r + h_1 t^(r-1) + ... + h_r.
struct HPolynomial {
  int rank = 0;
  IntPolynomial coeffs;  // rank + 1 entries, lowest degree first

  HVector ToHVector() const;
  static HPolynomial FromHVector(const HVector& h);

  friend bool operator==(const HPolynomial&, const HPolynomial&) = default;
};

// T_M(t, 0) by deletion-contraction. The pivot is the least element that is
// neither a loop nor a coloop; minors are memoized on their circuit family.
// A loop anywhere makes the whole evaluation zero.
HPolynomial HPolynomialTutte(const Matroid& m);

// h-polynomial read off the face counts of BC(m, natural order). Requires a
// loopless matroid.
HPolynomial HPolynomialFromComplex(const Matroid& m);

// h_{r-1}; requires rank >= 1.
std::int64_t Beta(const Matroid& m);

// Smallest k >= 1 with h_{r-k} != 0.
int ComponentCountFromH(const HVector& h, int rank);

IntPolynomial PoincarePolynomial(const FVector& f);
IntPolynomial HilbertNumerator(const HVector& h);
// sum_i f_i t^i (1-t)^(r-i) == sum_i h_i t^i, compared exactly.
bool CheckHilbertIdentity(const FVector& f, const HVector& h, int rank);

// h_M(t) == h_{M-e}(t) + h_{si(M/e)}(t), every term from face counts.
// Throws if e is a coloop.
bool DeletionContractionHCheck(const Matroid& m, Element e);

}  // namespace bcc

#endif  // BCCKIT_INVARIANTS_H_
