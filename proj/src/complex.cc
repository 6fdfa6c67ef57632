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

#include "bcckit/complex.h"

#include <algorithm>

#include "bcckit/error.h"
#include "bcckit/kernels.h"

namespace bcc {

namespace {

std::vector<std::uint32_t> CompressAll(const CompactIndex& index,
                                       std::span<const ElementSet> sets) {
  std::vector<std::uint32_t> out;
  out.reserve(sets.size());
  for (ElementSet s : sets) out.push_back(index.Compress(s));
  return out;
}

FVector TrimTrailingZeros(FVector f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace

Ordering Ordering::Natural(ElementSet ground) {
  return FromSequence(ground, Elements(ground));
}

Ordering Ordering::FromSequence(ElementSet ground,
                                std::vector<Element> sequence) {
  Ordering ord;
  ord.ground_ = ground;
  ElementSet seen = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Element e = sequence[i];
    if (e < 0 || e > kMaxElementId || !bcc::Contains(ground, e) ||
        bcc::Contains(seen, e)) {
      Fail(ErrorKind::kPrecondition,
           "ordering is not a permutation of " + FormatSet(ground));
    }
    seen |= Singleton(e);
    ord.position_[e] = static_cast<int>(i);
  }
  if (seen != ground) {
    Fail(ErrorKind::kPrecondition,
         "ordering misses elements of " + FormatSet(ground));
  }
  ord.sequence_ = std::move(sequence);
  return ord;
}

Element Ordering::Min(ElementSet s) const {
  Require(s != 0 && IsSubset(s, ground_), "Ordering::Min needs a non-empty subset");
  Element best = MinElement(s);
  ForEachElement(s, [&](Element e) {
    if (position_[e] < position_[best]) best = e;
  });
  return best;
}

int HVector::last_nonzero() const {
  for (int i = static_cast<int>(entries.size()) - 1; i >= 0; --i) {
    if (entries[i] != 0) return i;
  }
  return -1;
}

std::vector<std::int64_t> HVector::Truncated() const {
  return {entries.begin(), entries.begin() + (last_nonzero() + 1)};
}

SimplicialComplex::SimplicialComplex(std::vector<ElementSet> sorted_faces)
    : faces_(std::move(sorted_faces)) {
  int max_size = -1;
  for (ElementSet f : faces_) {
    vertices_ |= f;
    max_size = std::max(max_size, Size(f));
  }
  dimension_ = max_size - 1;
  for (ElementSet f : faces_) {
    bool maximal = true;
    ForEachElement(vertices_ & ~f, [&](Element v) {
      if (maximal && Contains(f | Singleton(v))) maximal = false;
    });
    if (maximal) facets_.push_back(f);
  }
  SortCanonical(facets_);
}

SimplicialComplex SimplicialComplex::Void() { return SimplicialComplex({}); }

SimplicialComplex SimplicialComplex::FromFacets(std::vector<ElementSet> facets) {
  std::vector<ElementSet> faces;
  for (ElementSet facet : facets) {
    CheckGroundCap(Size(facet));
    // Walk every subset of the facet.
    ElementSet sub = facet;
    while (true) {
      faces.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex SimplicialComplex::FromClosedFamily(
    std::vector<ElementSet> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex SimplicialComplex::FromBlockers(
    ElementSet ambient, std::span<const ElementSet> blockers) {
  CheckGroundCap(Size(ambient));
  const CompactIndex index(ambient);
  const int n = index.size();
  std::vector<std::uint32_t> compact;
  for (ElementSet b : blockers) {
    // A blocker reaching outside the ambient set never fires.
    if (IsSubset(b, ambient)) compact.push_back(index.Compress(b));
  }
  std::vector<std::uint64_t> bitmap(kernels::BitmapWords(n));
  kernels::MarkFree(n, compact, bitmap);
  std::vector<ElementSet> faces;
  for (std::size_t w = 0; w < bitmap.size(); ++w) {
    for (std::uint64_t bits = bitmap[w]; bits != 0; bits &= bits - 1) {
      const auto s = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
      faces.push_back(index.Expand(s));
    }
  }
  // Expand is monotone, so the faces are already sorted.
  return SimplicialComplex(std::move(faces));
}

bool SimplicialComplex::Contains(ElementSet face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

std::vector<ElementSet> BrokenCircuits(const Matroid& m, const Ordering& ord) {
  Require(ord.ground() == m.ground(), "ordering is over a different ground set");
  std::vector<ElementSet> out;
  for (ElementSet c : m.circuits()) {
    if (Size(c) == 1) {
      Fail(ErrorKind::kPrecondition,
           "loop " + FormatSet(c) + " gives an empty broken circuit");
    }
    out.push_back(c & ~Singleton(ord.Min(c)));
  }
  SortCanonical(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementSet> MinimalBrokenCircuits(const Matroid& m,
                                              const Ordering& ord) {
  return MinimalSets(BrokenCircuits(m, ord));
}

SimplicialComplex BcComplex(const Matroid& m, const Ordering& ord) {
  const auto blockers = MinimalBrokenCircuits(m, ord);
  return SimplicialComplex::FromBlockers(m.ground(), blockers);
}

SimplicialComplex ReducedBcComplex(const Matroid& m, const Ordering& ord) {
  const auto blockers = MinimalBrokenCircuits(m, ord);
  const ElementSet ambient =
      m.ground() == 0 ? 0 : m.ground() & ~Singleton(ord.sequence().front());
  return SimplicialComplex::FromBlockers(ambient, blockers);
}

FVector BcFVector(const Matroid& m, const Ordering& ord) {
  const CompactIndex index(m.ground());
  const auto blockers = MinimalBrokenCircuits(m, ord);
  const auto compact = CompressAll(index, blockers);
  std::vector<std::uint64_t> counts(index.size() + 1);
  kernels::CountFreeBySize(index.size(), compact, counts);
  return TrimTrailingZeros(FVector(counts.begin(), counts.end()));
}

SimplicialComplex MatroidComplex(const Matroid& m) {
  return SimplicialComplex::FromBlockers(m.ground(), m.circuits());
}

SimplicialComplex Link(const SimplicialComplex& complex, ElementSet face) {
  if (!complex.Contains(face)) {
    Fail(ErrorKind::kPrecondition, FormatSet(face) + " is not a face");
  }
  std::vector<ElementSet> faces;
  for (ElementSet h : complex.faces()) {
    if (IsSubset(face, h)) faces.push_back(h & ~face);
  }
  return SimplicialComplex::FromClosedFamily(std::move(faces));
}

SimplicialComplex Star(const SimplicialComplex& complex, ElementSet face) {
  if (!complex.Contains(face)) {
    Fail(ErrorKind::kPrecondition, FormatSet(face) + " is not a face");
  }
  std::vector<ElementSet> faces;
  for (ElementSet g : complex.faces()) {
    if (complex.Contains(g | face)) faces.push_back(g);
  }
  return SimplicialComplex::FromClosedFamily(std::move(faces));
}

SimplicialComplex Restriction(const SimplicialComplex& complex,
                              ElementSet subset) {
  if (complex.IsVoid()) return complex;
  std::vector<ElementSet> faces;
  for (ElementSet g : complex.faces()) {
    if (IsSubset(g, subset)) faces.push_back(g);
  }
  return SimplicialComplex::FromClosedFamily(std::move(faces));
}

ElementSet ConePoints(const SimplicialComplex& complex) {
  ElementSet apex = complex.vertices();
  for (ElementSet facet : complex.facets()) apex &= facet;
  return apex;
}

SimplicialComplex Core(const SimplicialComplex& complex) {
  return Restriction(complex, complex.vertices() & ~ConePoints(complex));
}

FVector FVectorOf(const SimplicialComplex& complex) {
  if (complex.IsVoid()) return {};
  FVector f(complex.dimension() + 2, 0);
  for (ElementSet g : complex.faces()) ++f[Size(g)];
  return f;
}

std::int64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

HVector HVectorFromF(const FVector& f) {
  Require(!f.empty(), "h-vector of the void complex is undefined");
  const int r = static_cast<int>(f.size()) - 1;
  HVector h;
  h.entries.assign(r + 1, 0);
  for (int i = 0; i <= r; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j <= i; ++j) {
      const std::int64_t term = Binomial(r - j, i - j) * f[j];
      sum += ((i - j) % 2 == 0) ? term : -term;
    }
    h.entries[i] = sum;
  }
  return h;
}

HVector HVectorOf(const SimplicialComplex& complex) {
  if (complex.IsVoid()) {
    Fail(ErrorKind::kPrecondition, "h-vector of the void complex is undefined");
  }
  return HVectorFromF(FVectorOf(complex));
}

std::int64_t ReducedEuler(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  for (ElementSet g : complex.faces()) chi += (Size(g) % 2 == 1) ? 1 : -1;
  return chi;
}

std::vector<ElementSet> MinimalNonfaces(const SimplicialComplex& complex) {
  return MinimalNonfaces(complex, complex.vertices());
}

std::vector<ElementSet> MinimalNonfaces(const SimplicialComplex& complex,
                                        ElementSet ambient) {
  CheckGroundCap(Size(ambient));
  const CompactIndex index(ambient);
  const int n = index.size();
  std::vector<std::uint8_t> is_face(std::size_t{1} << n, 0);
  for (ElementSet g : complex.faces()) {
    if (IsSubset(g, ambient)) is_face[index.Compress(g)] = 1;
  }
  std::vector<ElementSet> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (is_face[s]) continue;
    bool minimal = true;
    for (std::uint32_t rest = s; rest != 0 && minimal; rest &= rest - 1) {
      minimal = is_face[s & ~(rest & (~rest + 1))];
    }
    if (minimal) out.push_back(index.Expand(s));
  }
  SortCanonical(out);
  return out;
}

}  // namespace bcc
