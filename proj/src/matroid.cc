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

#include "bcckit/matroid.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "bcckit/error.h"
#include "bcckit/kernels.h"

namespace bcc {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

ElementSet LabelSet(const std::vector<Element>& labels) {
  ElementSet s = 0;
  for (Element e : labels) {
    if (e < 0 || e > kMaxElementId) {
      Fail(ErrorKind::kSchema, "element id " + std::to_string(e) +
                                   " outside [0, 63]");
    }
    if (Contains(s, e)) {
      Fail(ErrorKind::kSchema, "duplicate element id " + std::to_string(e));
    }
    s |= Singleton(e);
  }
  return s;
}

std::vector<Element> ConsecutiveLabels(int n, Element first) {
  std::vector<Element> labels(n);
  std::iota(labels.begin(), labels.end(), first);
  return labels;
}

int IndexOfLabel(const std::vector<Element>& labels, Element e) {
  const auto it = std::find(labels.begin(), labels.end(), e);
  return static_cast<int>(it - labels.begin());
}

// All k-subsets of the ground set.
std::vector<ElementSet> SubsetsOfSize(ElementSet ground, int k) {
  const CompactIndex index(ground);
  const int n = index.size();
  std::vector<ElementSet> out;
  if (k > n || k < 0) return out;
  if (k == 0) return {0};
  std::uint32_t s = (std::uint32_t{1} << k) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  while (s < limit) {
    out.push_back(index.Expand(s));
    const std::uint32_t c = s & (~s + 1);
    const std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

void RequireElement(const Matroid& m, Element e) {
  if (e < 0 || e > kMaxElementId || !Contains(m.ground(), e)) {
    Fail(ErrorKind::kPrecondition,
         "element " + std::to_string(e) + " is not in the ground set " +
             FormatSet(m.ground()));
  }
}

}  // namespace

void CheckGroundCap(int size) {
  if (size > kGroundCap) {
    Fail(ErrorKind::kCapExceeded,
         "ground set has " + std::to_string(size) + " elements; cap is " +
             std::to_string(kGroundCap));
  }
}

Matroid::Matroid(ElementSet ground, Representation rep,
                 std::vector<ElementSet> circuits)
    : ground_(ground), rep_(std::move(rep)) {
  CheckGroundCap(Size(ground_));
  circuits_ = std::make_shared<const std::vector<ElementSet>>(
      MinimalSets(std::move(circuits)));
  rank_ = NativeRank(ground_);
}

Matroid::Matroid(ElementSet ground, Representation rep)
    : ground_(ground), rep_(std::move(rep)) {
  CheckGroundCap(Size(ground_));
  std::vector<ElementSet> circuits;
  if (const auto* u = std::get_if<UniformRep>(&rep_)) {
    if (u->rank < Size(ground_)) circuits = SubsetsOfSize(ground_, u->rank + 1);
  } else {
    circuits = SweepCircuits(
        ground_, [this](ElementSet s) { return NativeRank(s); });
  }
  circuits_ = std::make_shared<const std::vector<ElementSet>>(
      MinimalSets(std::move(circuits)));
  rank_ = NativeRank(ground_);
}

Matroid Matroid::Uniform(int m, int n, Element first) {
  if (n < 0 || first < 0 || first + n - 1 > kMaxElementId) {
    Fail(ErrorKind::kSchema, "uniform matroid labels out of range");
  }
  CheckGroundCap(n);
  return UniformOn(m, MakeSet(ConsecutiveLabels(n, first)));
}

Matroid Matroid::UniformOn(int m, ElementSet ground) {
  CheckGroundCap(Size(ground));
  if (m < 0 || m > Size(ground)) {
    Fail(ErrorKind::kPrecondition,
         "uniform matroid needs 0 <= m <= n, got m=" + std::to_string(m) +
             ", n=" + std::to_string(Size(ground)));
  }
  return Matroid(ground, UniformRep{m});
}

Matroid Matroid::Graphic(int vertices, std::vector<GraphEdge> edges,
                         Element first) {
  CheckGroundCap(static_cast<int>(edges.size()));
  auto labels = ConsecutiveLabels(static_cast<int>(edges.size()), first);
  return GraphicLabelled(vertices, std::move(edges), std::move(labels));
}

Matroid Matroid::GraphicLabelled(int vertices, std::vector<GraphEdge> edges,
                                 std::vector<Element> labels) {
  CheckGroundCap(static_cast<int>(edges.size()));
  if (labels.size() != edges.size()) {
    Fail(ErrorKind::kSchema, "graphic matroid needs one label per edge");
  }
  for (const auto& edge : edges) {
    if (edge.u < 0 || edge.v < 0 || edge.u >= vertices || edge.v >= vertices) {
      Fail(ErrorKind::kSchema, "edge endpoint outside vertex range");
    }
  }
  const ElementSet ground = LabelSet(labels);
  return Matroid(ground,
                 GraphicRep{vertices, std::move(edges), std::move(labels)});
}

Matroid Matroid::Linear(RationalMatrix matrix, Element first) {
  CheckGroundCap(matrix.cols());
  auto labels = ConsecutiveLabels(matrix.cols(), first);
  return LinearLabelled(std::move(matrix), std::move(labels));
}

Matroid Matroid::LinearLabelled(RationalMatrix matrix,
                                std::vector<Element> labels) {
  CheckGroundCap(matrix.cols());
  if (static_cast<int>(labels.size()) != matrix.cols()) {
    Fail(ErrorKind::kSchema, "linear matroid needs one label per column");
  }
  const ElementSet ground = LabelSet(labels);
  return Matroid(ground, LinearRep{std::move(matrix), std::move(labels)});
}

Matroid Matroid::FromCircuits(ElementSet ground,
                              std::vector<ElementSet> circuits) {
  CheckGroundCap(Size(ground));
  for (ElementSet c : circuits) {
    if (c == 0) Fail(ErrorKind::kSchema, "empty circuit");
    if (!IsSubset(c, ground)) {
      Fail(ErrorKind::kSchema,
           "circuit " + FormatSet(c) + " leaves the ground set");
    }
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && IsSubset(circuits[i], circuits[j])) {
        Fail(ErrorKind::kSchema, "circuit " + FormatSet(circuits[i]) +
                                     " is contained in " +
                                     FormatSet(circuits[j]));
      }
    }
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const ElementSet both = circuits[i] | circuits[j];
      ForEachElement(circuits[i] & circuits[j], [&](Element e) {
        const ElementSet rest = both & ~Singleton(e);
        const bool found =
            std::any_of(circuits.begin(), circuits.end(),
                        [rest](ElementSet c) { return IsSubset(c, rest); });
        if (!found) {
          Fail(ErrorKind::kSchema,
               "circuit elimination fails for " + FormatSet(circuits[i]) +
                   ", " + FormatSet(circuits[j]) + " at " + std::to_string(e));
        }
      });
    }
  }
  return Matroid(ground, CircuitsRep{}, std::move(circuits));
}

Matroid Matroid::FromTrustedCircuits(ElementSet ground,
                                     std::vector<ElementSet> circuits) {
  return Matroid(ground, CircuitsRep{}, std::move(circuits));
}

std::vector<ElementSet> Matroid::SweepCircuits(
    ElementSet ground, const std::function<int(ElementSet)>& rank) {
  // Numeric order visits every proper subset before its supersets. A set is
  // a circuit iff it is dependent while all its maximal proper subsets are
  // independent, so the oracle is only asked about that frontier.
  const CompactIndex index(ground);
  const int n = index.size();
  std::vector<std::uint8_t> independent(std::size_t{1} << n, 0);
  independent[0] = 1;
  std::vector<ElementSet> circuits;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    bool frontier = true;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      if (!independent[s & ~(rest & (~rest + 1))]) {
        frontier = false;
        break;
      }
    }
    if (!frontier) continue;
    const ElementSet expanded = index.Expand(s);
    if (rank(expanded) == Size(expanded)) {
      independent[s] = 1;
    } else {
      circuits.push_back(expanded);
    }
  }
  return circuits;
}

int Matroid::NativeRank(ElementSet s) const {
  return std::visit(
      [&](const auto& rep) -> int {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, UniformRep>) {
          return std::min(rep.rank, Size(s));
        } else if constexpr (std::is_same_v<T, GraphicRep>) {
          DisjointSets forest(rep.vertices);
          int r = 0;
          for (std::size_t i = 0; i < rep.edges.size(); ++i) {
            if (Contains(s, rep.labels[i]) &&
                forest.Union(rep.edges[i].u, rep.edges[i].v)) {
              ++r;
            }
          }
          return r;
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          std::vector<int> cols;
          for (std::size_t i = 0; i < rep.labels.size(); ++i) {
            if (Contains(s, rep.labels[i])) cols.push_back(static_cast<int>(i));
          }
          return ColumnRank(rep.matrix, cols);
        } else {
          // Greedy: an element joins unless it closes a circuit.
          ElementSet basis = 0;
          ForEachElement(s, [&](Element e) {
            const ElementSet grown = basis | Singleton(e);
            const bool closes = std::any_of(
                circuits_->begin(), circuits_->end(),
                [grown](ElementSet c) { return IsSubset(c, grown); });
            if (!closes) basis = grown;
          });
          return Size(basis);
        }
      },
      rep_);
}

int Matroid::Rank(ElementSet s) const {
  if (!IsSubset(s, ground_)) {
    Fail(ErrorKind::kPrecondition, "set " + FormatSet(s) +
                                       " is not inside the ground set " +
                                       FormatSet(ground_));
  }
  return NativeRank(s);
}

bool Matroid::IsIndependent(ElementSet s) const {
  if (const auto* u = std::get_if<UniformRep>(&rep_)) {
    return IsSubset(s, ground_) && Size(s) <= u->rank;
  }
  return IsSubset(s, ground_) &&
         std::none_of(circuits_->begin(), circuits_->end(),
                      [s](ElementSet c) { return IsSubset(c, s); });
}

std::string Matroid::RepresentationName() const {
  static constexpr const char* kNames[] = {"uniform", "graphic", "linear",
                                           "circuits"};
  return kNames[rep_.index()];
}

Matroid Delete(const Matroid& m, Element e) {
  RequireElement(m, e);
  const ElementSet rest = m.ground() & ~Singleton(e);
  return std::visit(
      [&](const auto& rep) -> Matroid {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, UniformRep>) {
          return Matroid::UniformOn(std::min(rep.rank, Size(rest)), rest);
        } else if constexpr (std::is_same_v<T, GraphicRep>) {
          const int i = IndexOfLabel(rep.labels, e);
          auto edges = rep.edges;
          auto labels = rep.labels;
          edges.erase(edges.begin() + i);
          labels.erase(labels.begin() + i);
          return Matroid::GraphicLabelled(rep.vertices, std::move(edges),
                                          std::move(labels));
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          const int i = IndexOfLabel(rep.labels, e);
          auto labels = rep.labels;
          labels.erase(labels.begin() + i);
          return Matroid::LinearLabelled(rep.matrix.DropColumn(i),
                                         std::move(labels));
        } else {
          std::vector<ElementSet> kept;
          for (ElementSet c : m.circuits()) {
            if (!Contains(c, e)) kept.push_back(c);
          }
          return Matroid::FromTrustedCircuits(rest, std::move(kept));
        }
      },
      m.representation());
}

Matroid Contract(const Matroid& m, Element e) {
  RequireElement(m, e);
  const ElementSet rest = m.ground() & ~Singleton(e);
  if (m.Rank(Singleton(e)) == 0) return Delete(m, e);
  return std::visit(
      [&](const auto& rep) -> Matroid {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, UniformRep>) {
          return Matroid::UniformOn(rep.rank - 1, rest);
        } else if constexpr (std::is_same_v<T, GraphicRep>) {
          const int i = IndexOfLabel(rep.labels, e);
          const int keep = rep.edges[i].u;
          const int gone = rep.edges[i].v;
          std::vector<GraphEdge> edges;
          std::vector<Element> labels;
          for (std::size_t j = 0; j < rep.edges.size(); ++j) {
            if (static_cast<int>(j) == i) continue;
            GraphEdge edge = rep.edges[j];
            if (edge.u == gone) edge.u = keep;
            if (edge.v == gone) edge.v = keep;
            edges.push_back(edge);
            labels.push_back(rep.labels[j]);
          }
          return Matroid::GraphicLabelled(rep.vertices, std::move(edges),
                                          std::move(labels));
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          // Quotient by column e: clear its pivot row from every other
          // column, then drop that row and the column.
          const int i = IndexOfLabel(rep.labels, e);
          const RationalMatrix& a = rep.matrix;
          int pivot = 0;
          while (a.at(pivot, i) == 0) ++pivot;
          std::vector<std::vector<Rational>> cols;
          std::vector<Element> labels;
          for (int c = 0; c < a.cols(); ++c) {
            if (c == i) continue;
            const Rational factor = a.at(pivot, c) / a.at(pivot, i);
            std::vector<Rational> col;
            for (int r = 0; r < a.rows(); ++r) {
              if (r != pivot) col.push_back(a.at(r, c) - factor * a.at(r, i));
            }
            cols.push_back(std::move(col));
            labels.push_back(rep.labels[c]);
          }
          RationalMatrix quotient =
              cols.empty() ? RationalMatrix(a.rows() - 1, 0)
                           : RationalMatrix::FromColumns(std::move(cols));
          return Matroid::LinearLabelled(std::move(quotient),
                                         std::move(labels));
        } else {
          std::vector<ElementSet> reduced;
          for (ElementSet c : m.circuits()) {
            const ElementSet r = c & ~Singleton(e);
            if (r != 0) reduced.push_back(r);
          }
          return Matroid::FromTrustedCircuits(rest, std::move(reduced));
        }
      },
      m.representation());
}

Matroid DeleteSet(const Matroid& m, ElementSet s) {
  Matroid out = m;
  ForEachElement(s & m.ground(), [&](Element e) { out = Delete(out, e); });
  return out;
}

Matroid Restrict(const Matroid& m, ElementSet s) {
  Require(IsSubset(s, m.ground()), "restriction set leaves the ground set");
  return DeleteSet(m, m.ground() & ~s);
}

Matroid Dual(const Matroid& m) {
  if (const auto* u = std::get_if<UniformRep>(&m.representation())) {
    return Matroid::UniformOn(m.size() - u->rank, m.ground());
  }
  const RankTable table(m);
  const ElementSet ground = m.ground();
  const int r = m.rank();
  return Matroid::FromRankFunction(ground, [&](ElementSet s) {
    return Size(s) + table.Rank(ground & ~s) - r;
  });
}

Matroid Relabel(const Matroid& m, const std::map<Element, Element>& map) {
  auto image = [&](Element e) {
    const auto it = map.find(e);
    if (it == map.end()) {
      Fail(ErrorKind::kPrecondition,
           "relabelling misses element " + std::to_string(e));
    }
    return it->second;
  };
  auto image_set = [&](ElementSet s) {
    ElementSet out = 0;
    ForEachElement(s, [&](Element e) { out |= Singleton(image(e)); });
    return out;
  };
  std::vector<Element> new_ground;
  ForEachElement(m.ground(), [&](Element e) { new_ground.push_back(image(e)); });
  const ElementSet ground = LabelSet(new_ground);
  return std::visit(
      [&](const auto& rep) -> Matroid {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, UniformRep>) {
          return Matroid::UniformOn(rep.rank, ground);
        } else if constexpr (std::is_same_v<T, GraphicRep>) {
          std::vector<Element> labels;
          for (Element e : rep.labels) labels.push_back(image(e));
          return Matroid::GraphicLabelled(rep.vertices, rep.edges,
                                          std::move(labels));
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          std::vector<Element> labels;
          for (Element e : rep.labels) labels.push_back(image(e));
          return Matroid::LinearLabelled(rep.matrix, std::move(labels));
        } else {
          std::vector<ElementSet> circuits;
          for (ElementSet c : m.circuits()) circuits.push_back(image_set(c));
          return Matroid::FromTrustedCircuits(ground, std::move(circuits));
        }
      },
      m.representation());
}

std::vector<ElementSet> Bases(const Matroid& m) {
  const RankTable table(m);
  std::vector<ElementSet> bases;
  for (ElementSet s : SubsetsOfSize(m.ground(), m.rank())) {
    if (table.Rank(s) == m.rank()) bases.push_back(s);
  }
  std::sort(bases.begin(), bases.end());
  return bases;
}

ElementSet Loops(const Matroid& m) {
  ElementSet loops = 0;
  for (ElementSet c : m.circuits()) {
    if (Size(c) == 1) loops |= c;
  }
  return loops;
}

ElementSet Coloops(const Matroid& m) {
  ElementSet coloops = 0;
  ForEachElement(m.ground(), [&](Element e) {
    if (m.Rank(m.ground() & ~Singleton(e)) == m.rank() - 1) {
      coloops |= Singleton(e);
    }
  });
  return coloops;
}

std::vector<ElementSet> ParallelClasses(const Matroid& m) {
  const CompactIndex index(m.ground());
  DisjointSets classes(index.size());
  for (ElementSet c : m.circuits()) {
    if (Size(c) == 2) {
      classes.Union(index.position(MinElement(c)),
                    index.position(MaxElement(c)));
    }
  }
  const ElementSet loops = Loops(m);
  std::map<int, ElementSet> by_root;
  ForEachElement(m.ground() & ~loops, [&](Element e) {
    by_root[classes.Find(index.position(e))] |= Singleton(e);
  });
  std::vector<ElementSet> out;
  for (const auto& [root, members] : by_root) out.push_back(members);
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return MinElement(a) < MinElement(b);
  });
  return out;
}

Simplification Simplify(const Matroid& m) {
  std::map<Element, Element> representative;
  ElementSet drop = Loops(m);
  for (ElementSet cls : ParallelClasses(m)) {
    const Element rep = MinElement(cls);
    ForEachElement(cls, [&](Element e) { representative[e] = rep; });
    drop |= cls & ~Singleton(rep);
  }
  return {DeleteSet(m, drop), std::move(representative)};
}

bool IsSimple(const Matroid& m) {
  return std::none_of(m.circuits().begin(), m.circuits().end(),
                      [](ElementSet c) { return Size(c) <= 2; });
}

std::vector<ElementSet> ComponentSets(const Matroid& m) {
  const CompactIndex index(m.ground());
  DisjointSets parts(index.size());
  for (ElementSet c : m.circuits()) {
    const int first = index.position(MinElement(c));
    ForEachElement(c, [&](Element e) { parts.Union(first, index.position(e)); });
  }
  std::map<int, ElementSet> by_root;
  ForEachElement(m.ground(), [&](Element e) {
    by_root[parts.Find(index.position(e))] |= Singleton(e);
  });
  std::vector<ElementSet> out;
  for (const auto& [root, members] : by_root) out.push_back(members);
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return MinElement(a) < MinElement(b);
  });
  return out;
}

std::vector<std::pair<ElementSet, Matroid>> Components(const Matroid& m) {
  std::vector<std::pair<ElementSet, Matroid>> out;
  for (ElementSet part : ComponentSets(m)) {
    out.emplace_back(part, Restrict(m, part));
  }
  return out;
}

bool IsConnected(const Matroid& m) {
  return m.size() >= 1 && ComponentSets(m).size() == 1;
}

RankTable::RankTable(const Matroid& m) : index_(m.ground()) {
  const int n = index_.size();
  const std::size_t count = std::size_t{1} << n;
  ranks_.assign(count, 0);
  if (const auto* u = std::get_if<UniformRep>(&m.representation())) {
    for (std::size_t s = 0; s < count; ++s) {
      ranks_[s] = static_cast<std::uint8_t>(
          std::min(u->rank, std::popcount(static_cast<std::uint32_t>(s))));
    }
    return;
  }
  std::vector<std::uint32_t> blockers;
  for (ElementSet c : m.circuits()) blockers.push_back(index_.Compress(c));
  std::vector<std::uint64_t> independent(kernels::BitmapWords(n));
  kernels::MarkFree(n, blockers, independent);
  for (std::uint32_t s = 1; s < count; ++s) {
    if ((independent[s >> 6] >> (s & 63)) & 1) {
      ranks_[s] = static_cast<std::uint8_t>(std::popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      best = std::max(best, ranks_[s & ~(rest & (~rest + 1))]);
    }
    ranks_[s] = best;
  }
}

}  // namespace bcc
