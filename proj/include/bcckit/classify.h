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

#ifndef BCCKIT_CLASSIFY_H_
#define BCCKIT_CLASSIFY_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bcckit/complex.h"
#include "bcckit/matroid.h"

namespace bcc {

struct LinkShape {
  enum class Kind { kNGon, kPath, kPoint, kEmpty, kOther };
  Kind kind = Kind::kOther;
  int vertices = 0;

  std::string ToString() const;
  friend bool operator==(const LinkShape&, const LinkShape&) = default;
};

// Shape of a complex of dimension <= 1, read off its 1-skeleton: n-gon
// (connected, 2-regular, n >= 3), path on m >= 2 vertices, a single point,
// {empty set}, or anything else. Throws for higher dimension.
LinkShape ClassifyLinkShape(const SimplicialComplex& complex);

// Minimal non-faces pairwise disjoint.
bool IsCompleteIntersectionComplex(const SimplicialComplex& complex);
// Minimal broken circuits pairwise disjoint. Throws on loops.
bool IsCompleteIntersection(const Matroid& m, const Ordering& ord);

// Hochster's characterization of Gorenstein complexes, which is only valid
// for Cohen-Macaulay input: the caller vouches for that with `cm_granted`
// (broken circuit and matroid complexes are shellable). Refuses otherwise.
bool GorensteinShape(const SimplicialComplex& complex, bool cm_granted);

// The six equivalent conditions for a broken circuit complex:
//   0 Gorenstein, 1 locally Gorenstein, 2 Gorenstein links of dimension 1,
//   3 complete intersection links of dimension 1, 4 locally complete
//   intersection, 5 complete intersection.
struct ConditionPanel {
  std::array<bool, 6> conditions{};
  bool Agrees() const;
  std::string ToString() const;
};
ConditionPanel EvaluatePanel(const SimplicialComplex& complex);
ConditionPanel BcPanel(const Matroid& m, const Ordering& ord);

// On (h_0, ..., h_s) with h_s != 0.
bool DehnSommerville(std::span<const std::int64_t> truncated_h);
bool LastTwoSymmetric(std::span<const std::int64_t> truncated_h);

// Witness that a connected simple matroid is an iterated parallel connection
// of circuits U_{m,m+1}, or a coloop.
struct DecompositionTree {
  enum class Kind { kLeaf, kColoop, kParallel };
  Kind kind = Kind::kLeaf;
  ElementSet elements = 0;  // ground set of the subtree
  Element basepoint = -1;   // kParallel only
  std::shared_ptr<const DecompositionTree> left;
  std::shared_ptr<const DecompositionTree> right;

  // Leaves in left-to-right order.
  std::vector<ElementSet> Leaves() const;
  std::string ToString() const;
};

// Evaluates the tree with ParallelConnection.
Matroid Realize(const DecompositionTree& tree);

// Requires a simple connected matroid. Scans f in increasing id order for
// the first f with si(M/f) separable, splits off the first lifted
// component, verifies the split by comparing circuit families, and recurses
// on both sides. nullopt when some piece is neither a leaf nor splittable.
std::optional<DecompositionTree> ParallelDecompose(const Matroid& m);

// Requires a simple matroid. Per component: coloops as they are; otherwise
// the leaves of the decomposition tree are laid out one after another, each
// attached block contributing its elements other than the attaching point,
// so that point is the block's least element. The result is checked with
// IsCompleteIntersection before it is returned. nullopt iff some component
// does not decompose.
std::optional<Ordering> SynthesizeCiOrder(const Matroid& m);

struct OrderResult {
  Ordering order;
  bool complete_intersection = false;
};
// Every ordering of the ground set, in lexicographic order of sequences.
std::vector<OrderResult> ExhaustiveOrderSearch(const Matroid& m,
                                               int max_size = 7);

enum class OtVerdict { kCompleteIntersection, kGorenstein, kNeither };
std::string VerdictName(OtVerdict verdict);

struct ComponentReport {
  ElementSet elements = 0;
  bool coloop = false;
  std::optional<DecompositionTree> tree;
};

struct ClassificationReport {
  Matroid matroid;           // simplified input
  std::string notice;        // non-empty when the input was simplified
  HVector h;                 // full (h_0, ..., h_r)
  std::vector<std::int64_t> h_truncated;
  int s = 0;
  bool dehn_sommerville = false;
  bool last_two = false;
  bool decomposable = false;  // every component coloop or decomposed
  std::vector<ComponentReport> components;
  std::optional<Ordering> ci_order;
  std::optional<std::vector<OrderResult>> per_order_results;
  OtVerdict verdict = OtVerdict::kNeither;
};

// Simplifies first when needed. With `exhaustive_orders` the report also
// carries the per-order complete intersection test (|E| <= 7).
ClassificationReport ClassifyMatroid(const Matroid& m,
                                     bool exhaustive_orders = false);
// Complete intersection and Gorenstein coincide, so the verdict is either
// kCompleteIntersection or kNeither.
OtVerdict Verdict(const ClassificationReport& report);

}  // namespace bcc

#endif  // BCCKIT_CLASSIFY_H_
