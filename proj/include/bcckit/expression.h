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

#ifndef BCCKIT_EXPRESSION_H_
#define BCCKIT_EXPRESSION_H_

#include <string>

#include "bcckit/matroid.h"

namespace bcc {

// Construction expressions:
//
//   expr := U(m,n) | G(path) | sum(expr,expr) | P(expr,expr;e)
//         | S(expr,expr;e)
//
// U(m,n) lives on 1..n and G(path) loads any matroid JSON file. The right
// operand of a binary form is renumbered unless it already meets the left
// one correctly (disjoint for sum, exactly {e} for P and S): the glued
// element is the right operand's own e when it has one, otherwise its least
// element, and its other elements follow max(left) in increasing order.
// Malformed text is a schema error.
Matroid ParseExpression(const std::string& text);

}  // namespace bcc

#endif  // BCCKIT_EXPRESSION_H_
