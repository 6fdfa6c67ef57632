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

#ifndef BCCKIT_ORLIK_TERAO_H_
#define BCCKIT_ORLIK_TERAO_H_

#include <string>
#include <utility>
#include <vector>

#include "bcckit/classify.h"
#include "bcckit/complex.h"
#include "bcckit/exact_matrix.h"
#include "bcckit/matroid.h"

namespace bcc {

// A central arrangement given by the linear forms in the columns of an
// r x n rational matrix; column j is the hyperplane with element id j + 1.
class Arrangement {
 public:
  // Rejects zero columns and matrices of rank below their row count
  // (non-essential). Proportional columns are reduced to the first of each
  // class, and notice() says so.
  static Arrangement FromMatrix(const RationalMatrix& matrix);

  const RationalMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rows(); }
  // Surviving hyperplanes, labelled by their original column.
  const Matroid& matroid() const { return matroid_; }
  const std::string& notice() const { return notice_; }
  std::vector<Rational> form(Element e) const;

 private:
  RationalMatrix matrix_;
  std::vector<Element> labels_;
  Matroid matroid_;
  std::string notice_;
};

// Underlying matroid of the arrangement, without simplification; same
// errors as Arrangement::FromMatrix for zero columns and non-essential
// input.
Matroid UnderlyingMatroid(const RationalMatrix& matrix);

// sum_j c_j * prod_{l != j} x_{i_l} for a circuit {i_1 < ... < i_k} with
// sum_j c_j alpha_{i_j} = 0 and c_1 = 1.
struct CircuitRelation {
  ElementSet circuit = 0;
  std::vector<Element> elements;    // i_1 < ... < i_k
  std::vector<Rational> coeffs;     // c_1 .. c_k
  ElementSet lead_monomial = 0;     // filled by LeadMonomial callers

  // Term j is coeffs[j] times the product of all circuit variables but
  // elements[j].
  ElementSet TermMonomial(std::size_t j) const {
    return circuit & ~Singleton(elements[j]);
  }
};

CircuitRelation MakeCircuitRelation(const Arrangement& arrangement,
                                    ElementSet circuit);
std::vector<CircuitRelation> AllCircuitRelations(const Arrangement& arrangement);

// sum_j c_j alpha_{i_j} is the zero vector.
bool RelationVanishesOnForms(const Arrangement& arrangement,
                             const CircuitRelation& relation);
// Evaluates the relation polynomial at x_i = 1 / alpha_i(point). Throws if
// some alpha_i vanishes at the point.
Rational EvaluateAtReciprocals(const Arrangement& arrangement,
                               const CircuitRelation& relation,
                               const std::vector<Rational>& point);

enum class Precedence {
  kLaterFirst,    // later elements of the order are larger variables
  kEarlierFirst,  // the opposite; used as a negative control
};

// Lexicographic leading monomial of the relation.
ElementSet LeadMonomial(const CircuitRelation& relation, const Ordering& ord,
                        Precedence precedence = Precedence::kLaterFirst);

// Every circuit relation's leading monomial equals its broken circuit
// monomial. This is consistent with, but does not prove, the initial ideal
// statement; no Groebner basis is computed.
bool LeadTermCheck(const Arrangement& arrangement, const Ordering& ord,
                   Precedence precedence = Precedence::kLaterFirst);

struct OtReport {
  ClassificationReport classification;
  std::string explanation;
};
OtReport OtClassification(const Arrangement& arrangement);

}  // namespace bcc

#endif  // BCCKIT_ORLIK_TERAO_H_
