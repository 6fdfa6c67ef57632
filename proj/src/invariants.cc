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

#include "bcckit/invariants.h"

#include <algorithm>
#include <map>
#include <utility>

#include "bcckit/error.h"

namespace bcc {

namespace {

class TutteAtYZero {
 public:
  IntPolynomial Evaluate(ElementSet ground, std::vector<ElementSet> circuits) {
    for (ElementSet c : circuits) {
      if (Size(c) == 1) return {0};
    }
    ElementSet covered = 0;
    for (ElementSet c : circuits) covered |= c;
    const int coloops = Size(ground & ~covered);
    const ElementSet rest = ground & covered;
    IntPolynomial power(coloops + 1, 0);
    power[coloops] = 1;
    if (rest == 0) return power;

    Key key{rest, circuits};
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      const Element pivot = MinElement(rest);
      const ElementSet smaller = rest & ~Singleton(pivot);
      std::vector<ElementSet> deleted;
      std::vector<ElementSet> contracted;
      for (ElementSet c : circuits) {
        if (!Contains(c, pivot)) deleted.push_back(c);
        contracted.push_back(c & ~Singleton(pivot));
      }
      IntPolynomial value =
          Add(Evaluate(smaller, MinimalSets(std::move(deleted))),
              Evaluate(smaller, MinimalSets(std::move(contracted))));
      it = memo_.emplace(std::move(key), std::move(value)).first;
    }
    return Multiply(power, it->second);
  }

 private:
  using Key = std::pair<ElementSet, std::vector<ElementSet>>;
  std::map<Key, IntPolynomial> memo_;
};

IntPolynomial Pad(IntPolynomial p, std::size_t size) {
  if (p.size() < size) p.resize(size, 0);
  return p;
}

}  // namespace

IntPolynomial Add(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

IntPolynomial Multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPolynomial Trim(IntPolynomial p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(0);
  return p;
}

HVector HPolynomial::ToHVector() const {
  HVector h;
  h.entries.assign(rank + 1, 0);
  for (int i = 0; i <= rank; ++i) h.entries[i] = coeffs[rank - i];
  return h;
}

HPolynomial HPolynomial::FromHVector(const HVector& h) {
  HPolynomial p;
  p.rank = static_cast<int>(h.entries.size()) - 1;
  p.coeffs.assign(p.rank + 1, 0);
  for (int i = 0; i <= p.rank; ++i) p.coeffs[p.rank - i] = h.entries[i];
  return p;
}

HPolynomial HPolynomialTutte(const Matroid& m) {
  CheckGroundCap(m.size());
  TutteAtYZero tutte;
  HPolynomial out;
  out.rank = m.rank();
  out.coeffs = Pad(tutte.Evaluate(m.ground(), m.circuits()), out.rank + 1);
  out.coeffs.resize(out.rank + 1);
  return out;
}

HPolynomial HPolynomialFromComplex(const Matroid& m) {
  const FVector f = BcFVector(m, Ordering::Natural(m.ground()));
  HPolynomial p = HPolynomial::FromHVector(HVectorFromF(f));
  Require(p.rank == m.rank(), "broken circuit complex has unexpected dimension");
  return p;
}

std::int64_t Beta(const Matroid& m) {
  Require(m.rank() >= 1, "beta invariant needs rank >= 1");
  return HPolynomialTutte(m).coeffs[1];
}

int ComponentCountFromH(const HVector& h, int rank) {
  Require(rank >= 1, "component count needs rank >= 1");
  Require(static_cast<int>(h.entries.size()) == rank + 1,
          "h-vector length does not match the rank");
  Require(h.last_nonzero() >= 0, "h-vector is identically zero");
  for (int k = 1; k <= rank; ++k) {
    if (h.entries[rank - k] != 0) return k;
  }
  Fail(ErrorKind::kPrecondition, "no nonzero entry below h_r");
}

IntPolynomial PoincarePolynomial(const FVector& f) { return f; }

IntPolynomial HilbertNumerator(const HVector& h) { return h.entries; }

bool CheckHilbertIdentity(const FVector& f, const HVector& h, int rank) {
  if (static_cast<int>(f.size()) != rank + 1 ||
      static_cast<int>(h.entries.size()) != rank + 1) {
    Fail(ErrorKind::kPrecondition, "f and h must both have rank + 1 entries");
  }
  const IntPolynomial one_minus_t = {1, -1};
  IntPolynomial lhs = {0};
  for (int i = 0; i <= rank; ++i) {
    IntPolynomial term(i + 1, 0);
    term[i] = f[i];
    for (int k = 0; k < rank - i; ++k) term = Multiply(term, one_minus_t);
    lhs = Add(lhs, term);
  }
  return Trim(lhs) == Trim(HilbertNumerator(h));
}

bool DeletionContractionHCheck(const Matroid& m, Element e) {
  Require(Contains(m.ground(), e), "element outside the ground set");
  if (Contains(Coloops(m), e)) {
    Fail(ErrorKind::kPrecondition,
         "deletion-contraction identity needs a non-coloop element");
  }
  const HPolynomial whole = HPolynomialFromComplex(m);
  const HPolynomial deleted = HPolynomialFromComplex(Delete(m, e));
  const HPolynomial contracted =
      HPolynomialFromComplex(Simplify(Contract(m, e)).matroid);
  return Trim(whole.coeffs) == Trim(Add(deleted.coeffs, contracted.coeffs));
}

}  // namespace bcc
