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

#include "bcckit/json_io.h"

#include <fstream>
#include <sstream>

#include "bcckit/error.h"
#include "bcckit/invariants.h"

namespace bcc {

namespace {

[[noreturn]] void SchemaFail(const std::string& what) {
  Fail(ErrorKind::kSchema, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    SchemaFail(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) {
    SchemaFail(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

int AsInt(const Json& v, const char* what) {
  if (!v.is_number_integer()) SchemaFail(std::string(what) + " must be an integer");
  return v.get<int>();
}

Rational AsRational(const Json& v) {
  if (v.is_string()) return ParseRational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  SchemaFail("matrix entries must be strings \"p/q\" or integers");
}

std::vector<Element> ElementList(const Json& v, const char* what) {
  if (!v.is_array()) SchemaFail(std::string(what) + " must be an array");
  std::vector<Element> out;
  for (const Json& x : v) out.push_back(AsInt(x, what));
  return out;
}

std::vector<Element> Labels(const Json& j, int count) {
  if (!j.contains("labels")) {
    std::vector<Element> out(count);
    for (int i = 0; i < count; ++i) out[i] = i + 1;
    return out;
  }
  auto labels = ElementList(j.at("labels"), "labels");
  if (static_cast<int>(labels.size()) != count) {
    SchemaFail("labels must have one entry per edge or column");
  }
  return labels;
}

bool DefaultLabels(const std::vector<Element>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != static_cast<Element>(i) + 1) return false;
  }
  return true;
}

Json ElementsJson(const std::vector<Element>& elems) {
  Json out = Json::array();
  for (Element e : elems) out.push_back(e);
  return out;
}

Json Int64Array(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

Json LoadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) SchemaFail("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    SchemaFail(path + ": " + e.what());
  }
}

RationalMatrix MatrixFromJson(const Json& j) {
  const Json& cols = j.is_array() ? j : Field(j, "matrix");
  if (!cols.is_array() || cols.empty()) {
    SchemaFail("matrix must be a non-empty list of columns");
  }
  std::vector<std::vector<Rational>> out;
  for (const Json& col : cols) {
    if (!col.is_array() || col.empty()) SchemaFail("matrix column must be a list");
    std::vector<Rational> v;
    for (const Json& x : col) v.push_back(AsRational(x));
    if (!out.empty() && v.size() != out.front().size()) {
      SchemaFail("matrix columns differ in length");
    }
    out.push_back(std::move(v));
  }
  return RationalMatrix::FromColumns(std::move(out));
}

Json MatrixToJson(const RationalMatrix& matrix) {
  Json cols = Json::array();
  for (int c = 0; c < matrix.cols(); ++c) {
    Json col = Json::array();
    for (int r = 0; r < matrix.rows(); ++r) {
      col.push_back(FormatRational(matrix.at(r, c)));
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

Matroid MatroidFromJson(const Json& j) {
  const Json& type = Field(j, "type");
  if (!type.is_string()) SchemaFail("field \"type\" must be a string");
  const std::string kind = type.get<std::string>();
  if (kind == "uniform") {
    const int m = IntField(j, "m");
    const int n = IntField(j, "n");
    if (m < 0 || n < 0) SchemaFail("uniform parameters must be non-negative");
    CheckGroundCap(n);
    if (m > n) Fail(ErrorKind::kPrecondition, "uniform matroid needs m <= n");
    return Matroid::Uniform(m, n);
  }
  if (kind == "graphic") {
    const int vertices = IntField(j, "vertices");
    if (vertices < 0) SchemaFail("vertex count must be non-negative");
    const Json& edges = Field(j, "edges");
    if (!edges.is_array()) SchemaFail("edges must be an array");
    CheckGroundCap(static_cast<int>(edges.size()));
    std::vector<GraphEdge> list;
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 2) SchemaFail("each edge is a pair");
      const int u = AsInt(e[0], "edge endpoint");
      const int v = AsInt(e[1], "edge endpoint");
      if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
        SchemaFail("edge endpoint out of range");
      }
      list.push_back({u, v});
    }
    return Matroid::GraphicLabelled(vertices, std::move(list),
                                    Labels(j, static_cast<int>(edges.size())));
  }
  if (kind == "linear") {
    RationalMatrix matrix = MatrixFromJson(j);
    CheckGroundCap(matrix.cols());
    return Matroid::LinearLabelled(matrix, Labels(j, matrix.cols()));
  }
  if (kind == "circuits") {
    ElementSet ground = 0;
    if (j.contains("ground")) {
      const auto elems = ElementList(j.at("ground"), "ground");
      CheckGroundCap(static_cast<int>(elems.size()));
      ground = MakeSet(std::span<const Element>(elems));
      if (Size(ground) != static_cast<int>(elems.size())) {
        SchemaFail("ground lists an element twice");
      }
    } else {
      const int n = IntField(j, "n");
      if (n < 0) SchemaFail("n must be non-negative");
      CheckGroundCap(n);
      for (int i = 0; i < n; ++i) ground |= Singleton(i);
    }
    const Json& circuits = Field(j, "circuits");
    if (!circuits.is_array()) SchemaFail("circuits must be an array");
    std::vector<ElementSet> sets;
    for (const Json& c : circuits) {
      const auto elems = ElementList(c, "circuit");
      sets.push_back(MakeSet(std::span<const Element>(elems)));
    }
    return Matroid::FromCircuits(ground, std::move(sets));
  }
  SchemaFail("unknown matroid type \"" + kind + "\"");
}

Json MatroidToJson(const Matroid& m) {
  Json out;
  const auto& rep = m.representation();
  if (const auto* u = std::get_if<UniformRep>(&rep);
      u != nullptr && DefaultLabels(Elements(m.ground()))) {
    out["type"] = "uniform";
    out["m"] = u->rank;
    out["n"] = m.size();
    return out;
  }
  if (const auto* g = std::get_if<GraphicRep>(&rep)) {
    out["type"] = "graphic";
    out["vertices"] = g->vertices;
    Json edges = Json::array();
    for (const auto& e : g->edges) edges.push_back({e.u, e.v});
    out["edges"] = std::move(edges);
    if (!DefaultLabels(g->labels)) out["labels"] = ElementsJson(g->labels);
    return out;
  }
  if (const auto* l = std::get_if<LinearRep>(&rep)) {
    out["type"] = "linear";
    out["matrix"] = MatrixToJson(l->matrix);
    if (!DefaultLabels(l->labels)) out["labels"] = ElementsJson(l->labels);
    return out;
  }
  out["type"] = "circuits";
  out["ground"] = ElementsJson(Elements(m.ground()));
  out["circuits"] = SetsToJson(m.circuits());
  return out;
}

Ordering OrderingFromJson(const Json& j, ElementSet ground) {
  const auto seq = ElementList(j, "order");
  return Ordering::FromSequence(ground, seq);
}

Json SetToJson(ElementSet s) { return ElementsJson(Elements(s)); }

Json SetsToJson(const std::vector<ElementSet>& sets) {
  Json out = Json::array();
  for (ElementSet s : sets) out.push_back(SetToJson(s));
  return out;
}

Json ComplexToJson(const SimplicialComplex& complex) {
  Json out;
  out["vertices"] = SetToJson(complex.vertices());
  out["facets"] = SetsToJson(complex.facets());
  out["f"] = Int64Array(FVectorOf(complex));
  if (!complex.IsVoid()) out["h"] = Int64Array(HVectorOf(complex).entries);
  out["reduced_euler"] = ReducedEuler(complex);
  return out;
}

Json TreeToJson(const DecompositionTree& tree) {
  Json out;
  switch (tree.kind) {
    case DecompositionTree::Kind::kLeaf:
      out["kind"] = "uniform_circuit";
      out["m"] = Size(tree.elements) - 1;
      out["elements"] = SetToJson(tree.elements);
      break;
    case DecompositionTree::Kind::kColoop:
      out["kind"] = "coloop";
      out["elements"] = SetToJson(tree.elements);
      break;
    case DecompositionTree::Kind::kParallel:
      out["kind"] = "parallel";
      out["basepoint"] = tree.basepoint;
      out["left"] = TreeToJson(*tree.left);
      out["right"] = TreeToJson(*tree.right);
      break;
  }
  return out;
}

Json ReportToJson(const ClassificationReport& report) {
  Json out;
  out["matroid"] = MatroidToJson(report.matroid);
  if (!report.notice.empty()) out["notice"] = report.notice;
  out["h"] = Int64Array(report.h_truncated);
  out["h_full"] = Int64Array(report.h.entries);
  out["s"] = report.s;
  out["dehn_sommerville"] = report.dehn_sommerville;
  out["last_two"] = report.last_two;
  out["decomposable"] = report.decomposable;
  Json components = Json::array();
  Json decomposition = Json::array();
  for (const auto& c : report.components) {
    components.push_back(SetToJson(c.elements));
    if (c.tree) {
      decomposition.push_back(TreeToJson(*c.tree));
    } else {
      decomposition.push_back(nullptr);
    }
  }
  out["components"] = std::move(components);
  out["decomposition"] = std::move(decomposition);
  if (report.ci_order) {
    out["ci_order"] = ElementsJson(report.ci_order->sequence());
  } else {
    out["ci_order"] = nullptr;
  }
  if (report.per_order_results) {
    int passing = 0;
    for (const auto& r : *report.per_order_results) {
      passing += r.complete_intersection ? 1 : 0;
    }
    Json orders;
    orders["total"] = report.per_order_results->size();
    orders["complete_intersection"] = passing;
    out["orders"] = std::move(orders);
  }
  out["verdict"] = VerdictName(report.verdict);
  return out;
}

Json RelationToJson(const CircuitRelation& relation, ElementSet lead) {
  Json out;
  out["circuit"] = SetToJson(relation.circuit);
  Json coeffs = Json::array();
  for (const auto& c : relation.coeffs) coeffs.push_back(FormatRational(c));
  out["coeffs"] = std::move(coeffs);
  out["lead_monomial"] = SetToJson(lead);
  return out;
}

}  // namespace bcc
