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

#include "bcckit/classify.h"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "bcckit/constructions.h"
#include "bcckit/error.h"

namespace bcc {

namespace {

bool PairwiseDisjoint(std::span<const ElementSet> sets) {
  ElementSet seen = 0;
  for (ElementSet s : sets) {
    if ((seen & s) != 0) return false;
    seen |= s;
  }
  return true;
}

// Faces F whose link has dimension exactly 1, i.e. the largest face through
// F has two more elements.
std::vector<ElementSet> FacesWithOneDimensionalLink(
    const SimplicialComplex& complex) {
  std::vector<ElementSet> out;
  for (ElementSet f : complex.faces()) {
    int grow = 0;
    for (ElementSet facet : complex.facets()) {
      if (IsSubset(f, facet)) grow = std::max(grow, Size(facet) - Size(f));
    }
    if (grow == 2) out.push_back(f);
  }
  return out;
}

bool IsCiOneDimensionalShape(const LinkShape& shape) {
  using Kind = LinkShape::Kind;
  return (shape.kind == Kind::kNGon &&
          (shape.vertices == 3 || shape.vertices == 4)) ||
         (shape.kind == Kind::kPath && shape.vertices <= 3);
}

bool IsUniformCircuit(const Matroid& m) {
  return m.size() == m.rank() + 1 && m.circuits().size() == 1 &&
         m.circuits().front() == m.ground();
}

std::shared_ptr<const DecompositionTree> Share(DecompositionTree tree) {
  return std::make_shared<const DecompositionTree>(std::move(tree));
}

void CollectLeaves(const DecompositionTree& t, std::vector<ElementSet>& out) {
  if (t.kind == DecompositionTree::Kind::kParallel) {
    CollectLeaves(*t.left, out);
    CollectLeaves(*t.right, out);
  } else {
    out.push_back(t.elements);
  }
}

}  // namespace

std::string LinkShape::ToString() const {
  switch (kind) {
    case Kind::kNGon:
      return "NGon(" + std::to_string(vertices) + ")";
    case Kind::kPath:
      return "Path(" + std::to_string(vertices) + ")";
    case Kind::kPoint:
      return "Point";
    case Kind::kEmpty:
      return "Empty";
    case Kind::kOther:
      break;
  }
  return "Other";
}

LinkShape ClassifyLinkShape(const SimplicialComplex& complex) {
  if (complex.IsVoid()) return {LinkShape::Kind::kOther, 0};
  if (complex.dimension() > 1) {
    Fail(ErrorKind::kPrecondition, "link shapes are defined up to dimension 1");
  }
  const ElementSet vertices = complex.vertices();
  const int n = Size(vertices);
  if (n == 0) return {LinkShape::Kind::kEmpty, 0};
  if (n == 1) return {LinkShape::Kind::kPoint, 1};

  const CompactIndex index(vertices);
  std::vector<int> degree(n, 0);
  std::vector<int> component(n);
  for (int i = 0; i < n; ++i) component[i] = i;
  auto find = [&](int x) {
    while (component[x] != x) x = component[x] = component[component[x]];
    return x;
  };
  int edges = 0;
  for (ElementSet f : complex.faces()) {
    if (Size(f) != 2) continue;
    ++edges;
    const int a = index.position(MinElement(f));
    const int b = index.position(MaxElement(f));
    ++degree[a];
    ++degree[b];
    component[find(a)] = find(b);
  }
  int roots = 0;
  for (int i = 0; i < n; ++i) roots += (find(i) == i);
  if (roots != 1) return {LinkShape::Kind::kOther, n};
  const int max_degree = *std::max_element(degree.begin(), degree.end());
  if (edges == n && n >= 3 &&
      std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; })) {
    return {LinkShape::Kind::kNGon, n};
  }
  if (edges == n - 1 && max_degree <= 2) return {LinkShape::Kind::kPath, n};
  return {LinkShape::Kind::kOther, n};
}

bool IsCompleteIntersectionComplex(const SimplicialComplex& complex) {
  return PairwiseDisjoint(MinimalNonfaces(complex));
}

bool IsCompleteIntersection(const Matroid& m, const Ordering& ord) {
  return PairwiseDisjoint(MinimalBrokenCircuits(m, ord));
}

bool GorensteinShape(const SimplicialComplex& complex, bool cm_granted) {
  if (!cm_granted) {
    Fail(ErrorKind::kPrecondition,
         "the Gorenstein shape test is only valid for Cohen-Macaulay "
         "complexes");
  }
  if (complex.IsVoid()) return false;
  if (complex.dimension() == -1) return true;
  if (complex.dimension() == 0) return Size(complex.vertices()) <= 2;

  const SimplicialComplex core = Core(complex);
  const std::int64_t expected = (core.dimension() % 2 == 0) ? 1 : -1;
  if (ReducedEuler(core) != expected) return false;
  for (ElementSet f : FacesWithOneDimensionalLink(complex)) {
    const LinkShape shape = ClassifyLinkShape(Link(complex, f));
    const bool ok =
        (shape.kind == LinkShape::Kind::kNGon && shape.vertices >= 3) ||
        (shape.kind == LinkShape::Kind::kPath && shape.vertices <= 3);
    if (!ok) return false;
  }
  return true;
}

bool ConditionPanel::Agrees() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](bool c) { return c == conditions[0]; });
}

std::string ConditionPanel::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    if (i > 0) out += ',';
    out += conditions[i] ? 'T' : 'F';
  }
  return out + ")";
}

ConditionPanel EvaluatePanel(const SimplicialComplex& complex) {
  ConditionPanel panel;
  auto& c = panel.conditions;
  c[0] = GorensteinShape(complex, true);

  c[1] = true;
  c[4] = true;
  ForEachElement(complex.vertices(), [&](Element v) {
    const SimplicialComplex link = Link(complex, Singleton(v));
    c[1] = c[1] && GorensteinShape(link, true);
    c[4] = c[4] && IsCompleteIntersectionComplex(link);
  });

  c[2] = true;
  c[3] = true;
  for (ElementSet f : FacesWithOneDimensionalLink(complex)) {
    const SimplicialComplex link = Link(complex, f);
    c[2] = c[2] && GorensteinShape(link, true);
    c[3] = c[3] && IsCiOneDimensionalShape(ClassifyLinkShape(link));
  }

  c[5] = IsCompleteIntersectionComplex(complex);
  return panel;
}

ConditionPanel BcPanel(const Matroid& m, const Ordering& ord) {
  return EvaluatePanel(BcComplex(m, ord));
}

bool DehnSommerville(std::span<const std::int64_t> h) {
  Require(!h.empty() && h.back() != 0,
          "symmetry tests need a truncated h-vector with h_s != 0");
  const std::size_t s = h.size() - 1;
  for (std::size_t i = 0; i <= s; ++i) {
    if (h[i] != h[s - i]) return false;
  }
  return true;
}

bool LastTwoSymmetric(std::span<const std::int64_t> h) {
  Require(!h.empty() && h.back() != 0,
          "symmetry tests need a truncated h-vector with h_s != 0");
  const std::size_t s = h.size() - 1;
  if (s == 0) return true;
  return h[0] == h[s] && h[1] == h[s - 1];
}

std::vector<ElementSet> DecompositionTree::Leaves() const {
  std::vector<ElementSet> out;
  CollectLeaves(*this, out);
  return out;
}

std::string DecompositionTree::ToString() const {
  switch (kind) {
    case Kind::kLeaf:
      return "U(" + std::to_string(Size(elements) - 1) + "," +
             std::to_string(Size(elements)) + ")" + FormatSet(elements);
    case Kind::kColoop:
      return "coloop" + FormatSet(elements);
    case Kind::kParallel:
      break;
  }
  return "P(" + left->ToString() + ", " + right->ToString() + "; " +
         std::to_string(basepoint) + ")";
}

Matroid Realize(const DecompositionTree& tree) {
  switch (tree.kind) {
    case DecompositionTree::Kind::kLeaf:
      return Matroid::UniformOn(Size(tree.elements) - 1, tree.elements);
    case DecompositionTree::Kind::kColoop:
      return Matroid::UniformOn(1, tree.elements);
    case DecompositionTree::Kind::kParallel:
      break;
  }
  return ParallelConnection(
      {Realize(*tree.left), Realize(*tree.right), tree.basepoint});
}

std::optional<DecompositionTree> ParallelDecompose(const Matroid& m) {
  Require(IsSimple(m), "parallel decomposition needs a simple matroid");
  Require(IsConnected(m), "parallel decomposition needs a connected matroid");
  if (m.size() == 1 && m.rank() == 1) {
    return DecompositionTree{DecompositionTree::Kind::kColoop, m.ground(), -1, nullptr, nullptr};
  }
  if (IsUniformCircuit(m)) {
    return DecompositionTree{DecompositionTree::Kind::kLeaf, m.ground(), -1, nullptr, nullptr};
  }
  for (Element f : Elements(m.ground())) {
    const Simplification simple = Simplify(Contract(m, f));
    const auto parts = ComponentSets(simple.matroid);
    if (parts.size() < 2) continue;
    ElementSet first = 0;
    for (const auto& [element, rep] : simple.representative) {
      if (Contains(parts.front(), rep)) first |= Singleton(element);
    }
    const ElementSet rest = m.ground() & ~first & ~Singleton(f);
    const Matroid left = Restrict(m, first | Singleton(f));
    const Matroid right = Restrict(m, rest | Singleton(f));
    if (!(ParallelConnection({left, right, f}) == m)) continue;
    auto left_tree = ParallelDecompose(left);
    if (!left_tree) return std::nullopt;
    auto right_tree = ParallelDecompose(right);
    if (!right_tree) return std::nullopt;
    DecompositionTree node{DecompositionTree::Kind::kParallel, m.ground(), f, nullptr, nullptr};
    node.left = Share(std::move(*left_tree));
    node.right = Share(std::move(*right_tree));
    return node;
  }
  return std::nullopt;
}

std::optional<Ordering> SynthesizeCiOrder(const Matroid& m) {
  Require(IsSimple(m), "order synthesis needs a simple matroid");
  std::vector<Element> sequence;
  for (ElementSet part : ComponentSets(m)) {
    const Matroid component = Restrict(m, part);
    if (Size(part) == 1) {
      sequence.push_back(MinElement(part));
      continue;
    }
    const auto tree = ParallelDecompose(component);
    if (!tree) return std::nullopt;
    std::vector<ElementSet> pending = tree->Leaves();
    ElementSet placed = 0;
    while (!pending.empty()) {
      auto next = pending.begin();
      if (placed != 0) {
        next = std::find_if(pending.begin(), pending.end(), [&](ElementSet b) {
          return (b & placed) != 0;
        });
        if (next == pending.end() || Size(*next & placed) != 1) {
          throw std::logic_error("decomposition leaves do not form a block tree");
        }
      }
      for (Element e : Elements(*next & ~placed)) sequence.push_back(e);
      placed |= *next;
      pending.erase(next);
    }
  }
  Ordering order = Ordering::FromSequence(m.ground(), std::move(sequence));
  if (!IsCompleteIntersection(m, order)) {
    throw std::logic_error("synthesized order is not a complete intersection");
  }
  return order;
}

std::vector<OrderResult> ExhaustiveOrderSearch(const Matroid& m, int max_size) {
  if (m.size() > max_size) {
    Fail(ErrorKind::kCapExceeded,
         "exhaustive order search is limited to " + std::to_string(max_size) +
             " elements");
  }
  std::vector<Element> sequence = Elements(m.ground());
  std::vector<OrderResult> out;
  do {
    Ordering ord = Ordering::FromSequence(m.ground(), sequence);
    const bool ci = IsCompleteIntersection(m, ord);
    out.push_back({std::move(ord), ci});
  } while (std::next_permutation(sequence.begin(), sequence.end()));
  return out;
}

std::string VerdictName(OtVerdict verdict) {
  switch (verdict) {
    case OtVerdict::kCompleteIntersection:
      return "complete_intersection";
    case OtVerdict::kGorenstein:
      return "gorenstein";
    case OtVerdict::kNeither:
      break;
  }
  return "neither";
}

ClassificationReport ClassifyMatroid(const Matroid& input,
                                     bool exhaustive_orders) {
  ClassificationReport report;
  if (IsSimple(input)) {
    report.matroid = input;
  } else {
    report.matroid = Simplify(input).matroid;
    report.notice = "input simplified to ground set " +
                    FormatSet(report.matroid.ground());
  }
  const Matroid& m = report.matroid;
  report.h = HVectorFromF(BcFVector(m, Ordering::Natural(m.ground())));
  report.h_truncated = report.h.Truncated();
  report.s = report.h.last_nonzero();
  report.dehn_sommerville = DehnSommerville(report.h_truncated);
  report.last_two = LastTwoSymmetric(report.h_truncated);

  report.decomposable = true;
  for (ElementSet part : ComponentSets(m)) {
    ComponentReport component;
    component.elements = part;
    component.coloop = Size(part) == 1;
    if (!component.coloop) component.tree = ParallelDecompose(Restrict(m, part));
    report.decomposable =
        report.decomposable && (component.coloop || component.tree.has_value());
    report.components.push_back(std::move(component));
  }
  report.ci_order = SynthesizeCiOrder(m);
  if (exhaustive_orders) report.per_order_results = ExhaustiveOrderSearch(m);
  report.verdict = Verdict(report);
  return report;
}

OtVerdict Verdict(const ClassificationReport& report) {
  return report.last_two ? OtVerdict::kCompleteIntersection
                         : OtVerdict::kNeither;
}

}  // namespace bcc
