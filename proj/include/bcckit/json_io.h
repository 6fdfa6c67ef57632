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

#ifndef BCCKIT_JSON_IO_H_
#define BCCKIT_JSON_IO_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "bcckit/classify.h"
#include "bcckit/complex.h"
#include "bcckit/exact_matrix.h"
#include "bcckit/matroid.h"
#include "bcckit/orlik_terao.h"

namespace bcc {

using Json = nlohmann::ordered_json;

// Reads and parses a UTF-8 JSON file; unreadable or malformed files are
// schema errors.
Json LoadJsonFile(const std::string& path);

// Accepted forms:
//   {"type":"uniform","m":2,"n":4}                      ground 1..n
//   {"type":"graphic","vertices":4,"edges":[[0,1],...]} edges 1..|edges|
//   {"type":"linear","matrix":[["1","0"],...]}           one entry per column
//   {"type":"circuits","n":5,"circuits":[[0,1,2],...]}  ground 0..n-1
// Graphic and linear inputs may carry "labels"; circuits inputs may carry
// "ground" in place of "n".
Matroid MatroidFromJson(const Json& j);
// Round-trips through MatroidFromJson.
Json MatroidToJson(const Matroid& m);

// A bare column list, {"matrix": ...}, or a linear matroid object.
RationalMatrix MatrixFromJson(const Json& j);
Json MatrixToJson(const RationalMatrix& matrix);

Ordering OrderingFromJson(const Json& j, ElementSet ground);

Json SetToJson(ElementSet s);
Json SetsToJson(const std::vector<ElementSet>& sets);
Json ComplexToJson(const SimplicialComplex& complex);
Json TreeToJson(const DecompositionTree& tree);
Json ReportToJson(const ClassificationReport& report);
Json RelationToJson(const CircuitRelation& relation, ElementSet lead);

}  // namespace bcc

#endif  // BCCKIT_JSON_IO_H_
