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

#ifndef BCCKIT_MATROID_H_
#define BCCKIT_MATROID_H_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bcckit/element_set.h"
#include "bcckit/exact_matrix.h"

namespace bcc {

struct GraphEdge {
  int u = 0;
  int v = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// U_{rank,|ground|} on whatever ground set the matroid carries.
struct UniformRep {
  int rank = 0;
};

// Cycle matroid of a multigraph; edge i is labelled labels[i].
struct GraphicRep {
  int vertices = 0;
  std::vector<GraphEdge> edges;
  std::vector<Element> labels;
};

// Column i of the matrix is labelled labels[i].
struct LinearRep {
  RationalMatrix matrix;
  std::vector<Element> labels;
};

// The stored circuit family is the definition.
struct CircuitsRep {};

using Representation =
    std::variant<UniformRep, GraphicRep, LinearRep, CircuitsRep>;

// An immutable matroid. Every representation exposes an exact rank oracle;
// the circuit family is enumerated once at construction and kept in
// canonical order so that two matroids on the same ground set are equal iff
// their circuit lists are equal.
class Matroid {
 public:
  // The empty matroid.
  Matroid() : circuits_(std::make_shared<const std::vector<ElementSet>>()) {}

  // U_{m,n} on ids first, ..., first + n - 1.
  static Matroid Uniform(int m, int n, Element first = 1);
  static Matroid UniformOn(int m, ElementSet ground);
  // Edges are labelled first, first + 1, ... in list order.
  static Matroid Graphic(int vertices, std::vector<GraphEdge> edges,
                         Element first = 1);
  static Matroid GraphicLabelled(int vertices, std::vector<GraphEdge> edges,
                                 std::vector<Element> labels);
  // Columns are labelled first, first + 1, ...
  static Matroid Linear(RationalMatrix matrix, Element first = 1);
  static Matroid LinearLabelled(RationalMatrix matrix,
                                std::vector<Element> labels);
  // Checks that `circuits` is a non-empty-member antichain inside `ground`
  // satisfying circuit elimination; throws a schema error otherwise.
  static Matroid FromCircuits(ElementSet ground,
                              std::vector<ElementSet> circuits);
  // Trusted path for internally derived families: minimalizes and sorts,
  // but does not check the circuit axioms.
  static Matroid FromTrustedCircuits(ElementSet ground,
                                     std::vector<ElementSet> circuits);
  // Circuits representation of the matroid with the given rank function,
  // found by a subset sweep.
  template <typename RankFn>
  static Matroid FromRankFunction(ElementSet ground, RankFn&& rank);

  ElementSet ground() const { return ground_; }
  int size() const { return Size(ground_); }
  int rank() const { return rank_; }
  const std::vector<ElementSet>& circuits() const { return *circuits_; }
  const Representation& representation() const { return rep_; }
  std::string RepresentationName() const;

  // Throws if s is not inside the ground set.
  int Rank(ElementSet s) const;
  bool IsIndependent(ElementSet s) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.circuits() == b.circuits();
  }

 private:
  Matroid(ElementSet ground, Representation rep,
          std::vector<ElementSet> circuits);
  Matroid(ElementSet ground, Representation rep);

  static std::vector<ElementSet> SweepCircuits(
      ElementSet ground, const std::function<int(ElementSet)>& rank);

  int NativeRank(ElementSet s) const;

  ElementSet ground_ = 0;
  Representation rep_;
  std::shared_ptr<const std::vector<ElementSet>> circuits_;
  int rank_ = 0;
};

void CheckGroundCap(int size);

// Minors. Representations closed under the operation stay native; the rest
// fall back to the Circuits representation.
Matroid Delete(const Matroid& m, Element e);
Matroid Contract(const Matroid& m, Element e);
Matroid DeleteSet(const Matroid& m, ElementSet s);
Matroid Restrict(const Matroid& m, ElementSet s);
Matroid Dual(const Matroid& m);
Matroid Relabel(const Matroid& m, const std::map<Element, Element>& map);

// All subsets of the ground set with full rank and size rank(), ascending.
std::vector<ElementSet> Bases(const Matroid& m);

struct Simplification {
  Matroid matroid;
  // Every non-loop element mapped to the least member of its parallel class.
  std::map<Element, Element> representative;
};
Simplification Simplify(const Matroid& m);
bool IsSimple(const Matroid& m);

ElementSet Loops(const Matroid& m);
ElementSet Coloops(const Matroid& m);
// Parallel classes of non-loop elements, each listed once, ordered by least
// member.
std::vector<ElementSet> ParallelClasses(const Matroid& m);

// Connected components, ordered by least element.
std::vector<ElementSet> ComponentSets(const Matroid& m);
std::vector<std::pair<ElementSet, Matroid>> Components(const Matroid& m);
bool IsConnected(const Matroid& m);

// Rank of every subset of the ground set, indexed by CompactIndex position
// masks. Built from the circuits with the subset-filter kernel.
class RankTable {
 public:
  explicit RankTable(const Matroid& m);
  int Rank(ElementSet s) const { return ranks_[index_.Compress(s)]; }
  const CompactIndex& index() const { return index_; }

 private:
  CompactIndex index_;
  std::vector<std::uint8_t> ranks_;
};

template <typename RankFn>
Matroid Matroid::FromRankFunction(ElementSet ground, RankFn&& rank) {
  CheckGroundCap(Size(ground));
  return FromTrustedCircuits(
      ground, SweepCircuits(ground, std::function<int(ElementSet)>(rank)));
}

}  // namespace bcc

#endif  // BCCKIT_MATROID_H_
