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

#include "bcckit/orlik_terao.h"

#include <algorithm>
#include <numeric>

#include "bcckit/error.h"

namespace bcc {

namespace {

void CheckForms(const RationalMatrix& matrix) {
  for (int c = 0; c < matrix.cols(); ++c) {
    if (matrix.ColumnIsZero(c)) {
      Fail(ErrorKind::kPrecondition,
           "column " + std::to_string(c + 1) + " is zero, not a hyperplane");
    }
  }
  const int rank = ColumnRank(matrix);
  if (rank != matrix.rows()) {
    Fail(ErrorKind::kPrecondition,
         "arrangement is not essential: rank " + std::to_string(rank) +
             " in dimension " + std::to_string(matrix.rows()));
  }
}

bool Proportional(const RationalMatrix& m, int a, int b) {
  const int cols[] = {a, b};
  return ColumnRank(m, cols) == 1;
}

}  // namespace

Arrangement Arrangement::FromMatrix(const RationalMatrix& matrix) {
  CheckGroundCap(matrix.cols());
  CheckForms(matrix);
  std::vector<int> keep;
  std::vector<Element> dropped;
  for (int c = 0; c < matrix.cols(); ++c) {
    const bool duplicate = std::any_of(keep.begin(), keep.end(), [&](int k) {
      return Proportional(matrix, k, c);
    });
    if (duplicate) {
      dropped.push_back(c + 1);
    } else {
      keep.push_back(c);
    }
  }
  Arrangement out;
  out.matrix_ = matrix.SelectColumns(keep);
  for (int c : keep) out.labels_.push_back(c + 1);
  out.matroid_ = Matroid::LinearLabelled(out.matrix_, out.labels_);
  if (!dropped.empty()) {
    out.notice_ = "proportional hyperplanes removed: " +
                  FormatSet(MakeSet(std::span<const Element>(dropped)));
  }
  return out;
}

std::vector<Rational> Arrangement::form(Element e) const {
  const auto it = std::find(labels_.begin(), labels_.end(), e);
  Require(it != labels_.end(), "no hyperplane " + std::to_string(e));
  return matrix_.column(static_cast<int>(it - labels_.begin()));
}

Matroid UnderlyingMatroid(const RationalMatrix& matrix) {
  CheckForms(matrix);
  return Matroid::Linear(matrix, 1);
}

CircuitRelation MakeCircuitRelation(const Arrangement& arrangement,
                                    ElementSet circuit) {
  const Matroid& m = arrangement.matroid();
  const bool is_circuit = std::binary_search(
      m.circuits().begin(), m.circuits().end(), circuit,
      [](ElementSet a, ElementSet b) {
        return Size(a) != Size(b) ? Size(a) < Size(b) : a < b;
      });
  if (!is_circuit) {
    Fail(ErrorKind::kPrecondition, FormatSet(circuit) + " is not a circuit");
  }
  CircuitRelation rel;
  rel.circuit = circuit;
  rel.elements = Elements(circuit);
  std::vector<std::vector<Rational>> cols;
  for (Element e : rel.elements) cols.push_back(arrangement.form(e));
  const RationalMatrix sub = RationalMatrix::FromColumns(std::move(cols));
  std::vector<int> all(sub.cols());
  std::iota(all.begin(), all.end(), 0);
  auto null = ColumnNullspace(sub, all);
  if (null.size() != 1) {
    Fail(ErrorKind::kPrecondition,
         FormatSet(circuit) + " has a dependency space of dimension " +
             std::to_string(null.size()));
  }
  const Rational lead = null[0][0];
  for (auto& c : null[0]) c /= lead;
  rel.coeffs = std::move(null[0]);
  return rel;
}

std::vector<CircuitRelation> AllCircuitRelations(const Arrangement& arrangement) {
  std::vector<CircuitRelation> out;
  for (ElementSet c : arrangement.matroid().circuits()) {
    out.push_back(MakeCircuitRelation(arrangement, c));
  }
  return out;
}

bool RelationVanishesOnForms(const Arrangement& arrangement,
                             const CircuitRelation& relation) {
  std::vector<Rational> sum(arrangement.rank(), Rational(0));
  for (std::size_t j = 0; j < relation.elements.size(); ++j) {
    const auto form = arrangement.form(relation.elements[j]);
    for (int r = 0; r < arrangement.rank(); ++r) {
      sum[r] += relation.coeffs[j] * form[r];
    }
  }
  return std::all_of(sum.begin(), sum.end(),
                     [](const Rational& q) { return q == 0; });
}

Rational EvaluateAtReciprocals(const Arrangement& arrangement,
                               const CircuitRelation& relation,
                               const std::vector<Rational>& point) {
  Require(static_cast<int>(point.size()) == arrangement.rank(),
          "evaluation point has the wrong dimension");
  std::map<Element, Rational> x;
  for (Element e : relation.elements) {
    const auto form = arrangement.form(e);
    Rational value = 0;
    for (int r = 0; r < arrangement.rank(); ++r) value += form[r] * point[r];
    Require(value != 0, "a linear form vanishes at the evaluation point");
    x[e] = 1 / value;
  }
  Rational total = 0;
  for (std::size_t j = 0; j < relation.elements.size(); ++j) {
    Rational term = relation.coeffs[j];
    ForEachElement(relation.TermMonomial(j), [&](Element e) { term *= x[e]; });
    total += term;
  }
  return total;
}

ElementSet LeadMonomial(const CircuitRelation& relation, const Ordering& ord,
                        Precedence precedence) {
  // Variables from most to least significant.
  std::vector<Element> significance = ord.sequence();
  if (precedence == Precedence::kLaterFirst) {
    std::reverse(significance.begin(), significance.end());
  }
  auto greater = [&](ElementSet a, ElementSet b) {
    for (Element v : significance) {
      const bool in_a = Contains(a, v);
      const bool in_b = Contains(b, v);
      if (in_a != in_b) return in_a;
    }
    return false;
  };
  ElementSet best = 0;
  bool have = false;
  for (std::size_t j = 0; j < relation.elements.size(); ++j) {
    if (relation.coeffs[j] == 0) continue;
    const ElementSet mono = relation.TermMonomial(j);
    if (!have || greater(mono, best)) {
      best = mono;
      have = true;
    }
  }
  return best;
}

bool LeadTermCheck(const Arrangement& arrangement, const Ordering& ord,
                   Precedence precedence) {
  for (const CircuitRelation& rel : AllCircuitRelations(arrangement)) {
    const ElementSet broken = rel.circuit & ~Singleton(ord.Min(rel.circuit));
    if (LeadMonomial(rel, ord, precedence) != broken) return false;
  }
  return true;
}

OtReport OtClassification(const Arrangement& arrangement) {
  OtReport out;
  out.classification = ClassifyMatroid(arrangement.matroid());
  const auto& report = out.classification;
  const auto& h = report.h_truncated;
  const int n = report.matroid.size();
  const int r = report.matroid.rank();
  std::string text =
      "The Orlik-Terao algebra is a complete intersection iff it is "
      "Gorenstein iff the underlying matroid satisfies the h-vector "
      "conditions. h_0 = 1 and h_1 = n - r = " +
      std::to_string(n - r) +
      " are fixed by the arrangement, so only the last two nonzero entries "
      "decide: h_s = " +
      std::to_string(h.back());
  if (h.size() >= 2) {
    text += ", h_{s-1} = " + std::to_string(h[h.size() - 2]);
  }
  text += " (s = " + std::to_string(report.s) + "). Verdict: " +
          VerdictName(report.verdict) + ".";
  out.explanation = std::move(text);
  return out;
}

}  // namespace bcc
