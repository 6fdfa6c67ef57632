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

#include "bcckit/constructions.h"

#include "bcckit/error.h"

namespace bcc {

namespace {

void CheckConnection(const ConnectionSpec& spec) {
  const Element e = spec.basepoint;
  if (e < 0 || e > kMaxElementId ||
      (spec.left.ground() & spec.right.ground()) != Singleton(e)) {
    Fail(ErrorKind::kPrecondition,
         "connection needs ground sets meeting exactly in {" +
             std::to_string(e) + "}, got " + FormatSet(spec.left.ground()) +
             " and " + FormatSet(spec.right.ground()));
  }
  for (const Matroid* side : {&spec.left, &spec.right}) {
    if (Contains(Loops(*side), e) || Contains(Coloops(*side), e)) {
      Fail(ErrorKind::kPrecondition,
           "basepoint " + std::to_string(e) +
               " is a loop or coloop on one side of the connection");
    }
  }
}

}  // namespace

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  if ((a.ground() & b.ground()) != 0) {
    Fail(ErrorKind::kPrecondition, "direct sum of overlapping ground sets " +
                                       FormatSet(a.ground()) + " and " +
                                       FormatSet(b.ground()));
  }
  CheckGroundCap(a.size() + b.size());
  std::vector<ElementSet> circuits = a.circuits();
  circuits.insert(circuits.end(), b.circuits().begin(), b.circuits().end());
  return Matroid::FromTrustedCircuits(a.ground() | b.ground(),
                                      std::move(circuits));
}

Matroid SeriesConnection(const ConnectionSpec& spec) {
  CheckConnection(spec);
  const Element e = spec.basepoint;
  const ElementSet ground = spec.left.ground() | spec.right.ground();
  CheckGroundCap(Size(ground));
  std::vector<ElementSet> circuits;
  for (const Matroid* side : {&spec.left, &spec.right}) {
    for (ElementSet c : side->circuits()) {
      if (!Contains(c, e)) circuits.push_back(c);
    }
  }
  for (ElementSet c1 : spec.left.circuits()) {
    if (!Contains(c1, e)) continue;
    for (ElementSet c2 : spec.right.circuits()) {
      if (Contains(c2, e)) circuits.push_back(c1 | c2);
    }
  }
  return Matroid::FromTrustedCircuits(ground, std::move(circuits));
}

Matroid ParallelConnection(const ConnectionSpec& spec) {
  CheckConnection(spec);
  const Element e = spec.basepoint;
  const ElementSet ground = spec.left.ground() | spec.right.ground();
  CheckGroundCap(Size(ground));
  std::vector<ElementSet> circuits = spec.left.circuits();
  circuits.insert(circuits.end(), spec.right.circuits().begin(),
                  spec.right.circuits().end());
  for (ElementSet c1 : spec.left.circuits()) {
    if (!Contains(c1, e)) continue;
    for (ElementSet c2 : spec.right.circuits()) {
      if (Contains(c2, e)) circuits.push_back((c1 | c2) & ~Singleton(e));
    }
  }
  return Matroid::FromTrustedCircuits(ground, std::move(circuits));
}

Matroid FreeExtension(const Matroid& m) {
  CheckGroundCap(m.size() + 1);
  const Element fresh = m.ground() == 0 ? 0 : MaxElement(m.ground()) + 1;
  if (fresh > kMaxElementId) {
    Fail(ErrorKind::kCapExceeded, "no element id left for the extension");
  }
  if (const auto* u = std::get_if<UniformRep>(&m.representation())) {
    return Matroid::UniformOn(u->rank, m.ground() | Singleton(fresh));
  }
  const RankTable table(m);
  const int r = m.rank();
  const ElementSet added = Singleton(fresh);
  return Matroid::FromRankFunction(
      m.ground() | added, [&](ElementSet s) {
        if (!Contains(s, fresh)) return table.Rank(s);
        return std::min(table.Rank(s & ~added) + 1, r);
      });
}

Matroid FreeDualExtension(const Matroid& m) {
  return Dual(FreeExtension(Dual(m)));
}

Matroid CircuitMatroid(int m, Element first) {
  return Matroid::Uniform(m, m + 1, first);
}

}  // namespace bcc
