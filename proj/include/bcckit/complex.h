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

#ifndef BCCKIT_COMPLEX_H_
#define BCCKIT_COMPLEX_H_

#include <cstdint>
#include <vector>

#include "bcckit/element_set.h"
#include "bcckit/matroid.h"

namespace bcc {

// A total order on a ground set.
class Ordering {
 public:
  // Increasing id order.
  static Ordering Natural(ElementSet ground);
  // `sequence` lists every ground element exactly once, least first.
  static Ordering FromSequence(ElementSet ground, std::vector<Element> sequence);

  ElementSet ground() const { return ground_; }
  const std::vector<Element>& sequence() const { return sequence_; }
  int position(Element e) const { return position_[e]; }
  bool Less(Element a, Element b) const { return position_[a] < position_[b]; }
  // Least member of a non-empty set under this order.
  Element Min(ElementSet s) const;

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  ElementSet ground_ = 0;
  std::vector<Element> sequence_;
  std::vector<int> position_ = std::vector<int>(64, -1);
};

using FVector = std::vector<std::int64_t>;

struct HVector {
  std::vector<std::int64_t> entries;  // h_0, ..., h_r

  // Index s of the last nonzero entry, or -1 when every entry is zero.
  int last_nonzero() const;
  // (h_0, ..., h_s) with the trailing zeros dropped.
  std::vector<std::int64_t> Truncated() const;

  friend bool operator==(const HVector&, const HVector&) = default;
};

// Finite simplicial complex stored as its full face list. The vertex set is
// the set of elements that appear in some face. The void complex (no faces
// at all) is representable and distinct from {empty set}.
class SimplicialComplex {
 public:
  static SimplicialComplex Void();
  // Downward closure of the given sets.
  static SimplicialComplex FromFacets(std::vector<ElementSet> facets);
  // `faces` must already be closed under taking subsets; only sorted here.
  static SimplicialComplex FromClosedFamily(std::vector<ElementSet> faces);
  // Subsets of `ambient` containing none of the blockers.
  static SimplicialComplex FromBlockers(ElementSet ambient,
                                        std::span<const ElementSet> blockers);

  bool IsVoid() const { return faces_.empty(); }
  ElementSet vertices() const { return vertices_; }
  // Sorted by mask value.
  const std::vector<ElementSet>& faces() const { return faces_; }
  // Canonical order (size, then mask).
  const std::vector<ElementSet>& facets() const { return facets_; }
  bool Contains(ElementSet face) const;
  // Largest face size minus one; -1 for {empty set}. Undefined for Void().
  int dimension() const { return dimension_; }

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.faces_ == b.faces_;
  }

 private:
  explicit SimplicialComplex(std::vector<ElementSet> sorted_faces);

  std::vector<ElementSet> faces_;
  std::vector<ElementSet> facets_;
  ElementSet vertices_ = 0;
  int dimension_ = -1;
};

// Circuits with their least element removed. Throws on loops, where the
// broken circuit would be empty.
std::vector<ElementSet> BrokenCircuits(const Matroid& m, const Ordering& ord);
std::vector<ElementSet> MinimalBrokenCircuits(const Matroid& m,
                                              const Ordering& ord);

SimplicialComplex BcComplex(const Matroid& m, const Ordering& ord);
// Faces of BcComplex avoiding the least element of the order.
SimplicialComplex ReducedBcComplex(const Matroid& m, const Ordering& ord);
// f-vector of BcComplex straight from the counting kernel.
FVector BcFVector(const Matroid& m, const Ordering& ord);
// Independent sets of m.
SimplicialComplex MatroidComplex(const Matroid& m);

SimplicialComplex Link(const SimplicialComplex& complex, ElementSet face);
SimplicialComplex Star(const SimplicialComplex& complex, ElementSet face);
// Faces inside `subset`.
SimplicialComplex Restriction(const SimplicialComplex& complex,
                              ElementSet subset);
// Vertices lying in every facet; these are exactly the i with star{i} = the
// whole complex.
ElementSet ConePoints(const SimplicialComplex& complex);
SimplicialComplex Core(const SimplicialComplex& complex);

// f_i = number of faces of cardinality i, i = 0..dim+1. Empty for Void().
FVector FVectorOf(const SimplicialComplex& complex);
// h_i = sum_{j<=i} (-1)^(i-j) C(r-j, i-j) f_j with r = f.size() - 1.
HVector HVectorFromF(const FVector& f);
HVector HVectorOf(const SimplicialComplex& complex);
std::int64_t ReducedEuler(const SimplicialComplex& complex);

// Inclusion-minimal subsets of the vertex set (or of `ambient`) that are not
// faces.
std::vector<ElementSet> MinimalNonfaces(const SimplicialComplex& complex);
std::vector<ElementSet> MinimalNonfaces(const SimplicialComplex& complex,
                                        ElementSet ambient);

std::int64_t Binomial(int n, int k);

}  // namespace bcc

#endif  // BCCKIT_COMPLEX_H_
