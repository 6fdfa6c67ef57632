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

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcckit/classify.h"
#include "bcckit/complex.h"
#include "bcckit/error.h"
#include "bcckit/expression.h"
#include "bcckit/invariants.h"
#include "bcckit/json_io.h"
#include "bcckit/kernels.h"
#include "bcckit/orlik_terao.h"
#include "bcckit/suite.h"

namespace {

using bcc::Element;
using bcc::ElementSet;
using bcc::Json;
using bcc::Matroid;
using bcc::Ordering;

enum ExitCode {
  kOk = 0,
  kPropertyFailure = 1,
  kSchemaError = 2,
  kCapError = 3,
  kPreconditionError = 4,
};

Matroid LoadInput(const std::string& input) {
  if (std::filesystem::is_regular_file(input)) {
    return bcc::MatroidFromJson(bcc::LoadJsonFile(input));
  }
  return bcc::ParseExpression(input);
}

// "3,1,2" against the ground set; a malformed list is a schema error.
Ordering ParseOrder(const std::string& text, ElementSet ground) {
  std::vector<Element> seq;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      seq.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      bcc::Fail(bcc::ErrorKind::kSchema, "bad element \"" + item + "\" in --order");
    }
  }
  try {
    return Ordering::FromSequence(ground, seq);
  } catch (const bcc::Error& e) {
    bcc::Fail(bcc::ErrorKind::kSchema, e.what());
  }
}

std::string Vec(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::string OrderText(const Ordering& ord) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ord.sequence().size(); ++i) {
    out << (i ? "<" : "") << ord.sequence()[i];
  }
  return out.str();
}

Json OrderJson(const Ordering& ord) {
  Json out = Json::array();
  for (Element e : ord.sequence()) out.push_back(e);
  return out;
}

Json PanelJson(const bcc::ConditionPanel& panel) {
  static const char* kNames[] = {"gorenstein",        "locally_gorenstein",
                                 "gorenstein_links",  "ci_links",
                                 "locally_ci",        "complete_intersection"};
  Json out;
  for (int i = 0; i < 6; ++i) out[kNames[i]] = panel.conditions[i];
  out["agree"] = panel.Agrees();
  return out;
}

void PrintTree(std::ostream& out, const bcc::DecompositionTree& tree, int depth) {
  const std::string pad(2 * depth, ' ');
  switch (tree.kind) {
    case bcc::DecompositionTree::Kind::kLeaf:
      out << pad << "U(" << bcc::Size(tree.elements) - 1 << ","
          << bcc::Size(tree.elements) << ") on " << bcc::FormatSet(tree.elements) << "\n";
      break;
    case bcc::DecompositionTree::Kind::kColoop:
      out << pad << "coloop " << bcc::FormatSet(tree.elements) << "\n";
      break;
    case bcc::DecompositionTree::Kind::kParallel:
      out << pad << "parallel connection at " << tree.basepoint << "\n";
      PrintTree(out, *tree.left, depth + 1);
      PrintTree(out, *tree.right, depth + 1);
      break;
  }
}

struct AnalyzeArgs {
  std::string input;
  std::string order;
  bool all_orders = false;
  bool json = false;
};

int Analyze(const AnalyzeArgs& args) {
  const Matroid input = LoadInput(args.input);
  if (args.all_orders && input.size() > 7) {
    bcc::Fail(bcc::ErrorKind::kCapExceeded, "--all-orders is limited to 7 elements");
  }
  const auto report = bcc::ClassifyMatroid(input, args.all_orders);
  const Matroid& m = report.matroid;
  const Ordering ord = args.order.empty() ? Ordering::Natural(m.ground())
                                          : ParseOrder(args.order, m.ground());
  const auto panel = bcc::BcPanel(m, ord);
  const auto mbc = bcc::MinimalBrokenCircuits(m, ord);
  const auto tutte = bcc::HPolynomialTutte(input).ToHVector().entries;
  const std::int64_t beta = m.rank() >= 1 ? bcc::Beta(m) : 0;

  if (args.json) {
    Json out = bcc::ReportToJson(report);
    out["input"] = bcc::MatroidToJson(input);
    out["circuits"] = bcc::SetsToJson(m.circuits());
    out["rank"] = m.rank();
    out["beta"] = beta;
    out["tutte_h"] = tutte;
    out["order"] = OrderJson(ord);
    out["minimal_broken_circuits"] = bcc::SetsToJson(mbc);
    out["panel"] = PanelJson(panel);
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  auto& out = std::cout;
  if (!report.notice.empty()) out << "notice: " << report.notice << "\n";
  out << "matroid: " << m.RepresentationName() << " on " << bcc::FormatSet(m.ground())
      << ", rank " << m.rank() << "\n";
  out << "circuits (" << m.circuits().size() << "): " << bcc::FormatSets(m.circuits())
      << "\n";
  out << "h-vector: " << Vec(report.h.entries) << ", truncated " << Vec(report.h_truncated)
      << ", s = " << report.s << "\n";
  out << "T(t,0) of the input: " << Vec(tutte) << "\n";
  out << "beta: " << beta << "\n";
  out << "components (" << report.components.size() << "):";
  for (const auto& c : report.components) out << " " << bcc::FormatSet(c.elements);
  out << "\n";
  out << "order " << OrderText(ord) << ": minimal broken circuits "
      << bcc::FormatSets(mbc) << "\n";
  out << "  Gorenstein, locally Gorenstein, Gorenstein 1-dim links, CI 1-dim links, "
         "locally CI, CI: "
      << panel.ToString() << "\n";
  const auto& h = report.h_truncated;
  out << "Dehn-Sommerville symmetric: " << (report.dehn_sommerville ? "yes" : "no") << "\n";
  out << "last two entries symmetric: " << (report.last_two ? "yes" : "no");
  if (h.size() >= 2) {
    out << " (h_0 = " << h[0] << ", h_s = " << h.back() << "; h_1 = " << h[1]
        << ", h_{s-1} = " << h[h.size() - 2] << ")";
  }
  out << "\n";
  out << "parallel decomposition: " << (report.decomposable ? "yes" : "no") << "\n";
  for (const auto& c : report.components) {
    if (c.tree) {
      PrintTree(out, *c.tree, 1);
    } else {
      out << "  " << bcc::FormatSet(c.elements) << ": not an iterated parallel "
          << "connection of circuits\n";
    }
  }
  out << "CI order: " << (report.ci_order ? OrderText(*report.ci_order) : "none") << "\n";
  if (report.per_order_results) {
    int passing = 0;
    for (const auto& r : *report.per_order_results) passing += r.complete_intersection;
    out << "all orders: " << passing << " of " << report.per_order_results->size()
        << " orders give a complete intersection\n";
  }
  out << "verdict: " << bcc::VerdictName(report.verdict)
      << (report.verdict == bcc::OtVerdict::kCompleteIntersection
              ? " (Gorenstein and complete intersection)\n"
              : " (neither Gorenstein nor complete intersection)\n");
  return kOk;
}

int Decompose(const std::string& input, bool json) {
  const auto report = bcc::ClassifyMatroid(LoadInput(input));
  if (json) {
    Json out;
    if (!report.notice.empty()) out["notice"] = report.notice;
    out["components"] = Json::array();
    for (const auto& c : report.components) {
      Json j;
      j["elements"] = bcc::SetToJson(c.elements);
      j["decomposition"] = c.tree ? bcc::TreeToJson(*c.tree) : Json(nullptr);
      out["components"].push_back(std::move(j));
    }
    out["decomposable"] = report.decomposable;
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  if (!report.notice.empty()) std::cout << "notice: " << report.notice << "\n";
  for (const auto& c : report.components) {
    std::cout << "component " << bcc::FormatSet(c.elements) << ":\n";
    if (c.tree) {
      PrintTree(std::cout, *c.tree, 1);
    } else {
      std::cout << "  no decomposition\n";
    }
  }
  return kOk;
}

int Order(const std::string& input, bool json) {
  const auto report = bcc::ClassifyMatroid(LoadInput(input));
  if (json) {
    Json out;
    if (!report.notice.empty()) out["notice"] = report.notice;
    out["ci_order"] = report.ci_order ? OrderJson(*report.ci_order) : Json(nullptr);
    if (report.ci_order) {
      out["minimal_broken_circuits"] =
          bcc::SetsToJson(bcc::MinimalBrokenCircuits(report.matroid, *report.ci_order));
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  if (!report.notice.empty()) std::cout << "notice: " << report.notice << "\n";
  if (!report.ci_order) {
    std::cout << "no complete intersection order\n";
    return kOk;
  }
  std::cout << OrderText(*report.ci_order) << "\n";
  std::cout << "minimal broken circuits: "
            << bcc::FormatSets(bcc::MinimalBrokenCircuits(report.matroid, *report.ci_order))
            << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string corpus;
  int jobs = 0;
  bool inject_fault = false;
  bool json = false;
  bool timing = false;
  std::vector<int> only;
};

int Verify(const VerifyArgs& args) {
  const bcc::CorpusSpec spec = args.corpus.empty()
                                   ? bcc::CorpusSpec::Default()
                                   : bcc::CorpusSpecFromJson(bcc::LoadJsonFile(args.corpus));
  bcc::SuiteOptions options;
  options.jobs = args.jobs;
  options.inject_fault = args.inject_fault;
  options.only.insert(args.only.begin(), args.only.end());
  const auto report = bcc::RunSuite(spec, options);
  if (args.json) {
    Json out = report.ToJson(args.timing);
    out["corpus"] = bcc::CorpusSpecToJson(spec);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << report.ToText(args.timing);
  }
  return report.passed() ? kOk : kPropertyFailure;
}

int Ot(const std::string& path, const std::string& order, bool json) {
  const auto arrangement = bcc::Arrangement::FromMatrix(bcc::MatrixFromJson(bcc::LoadJsonFile(path)));
  const Matroid& m = arrangement.matroid();
  const Ordering ord = order.empty() ? Ordering::Natural(m.ground()) : ParseOrder(order, m.ground());
  const auto relations = bcc::AllCircuitRelations(arrangement);
  const bool lead_ok = bcc::LeadTermCheck(arrangement, ord);
  const auto ot = bcc::OtClassification(arrangement);
  const char* lead_text =
      "lead terms under lex order with later elements larger: ";
  const char* scope =
      "consistent with the broken circuit ideal being an initial ideal "
      "(generator-level check only, no Groebner basis computed)";
  if (json) {
    Json out;
    if (!arrangement.notice().empty()) out["notice"] = arrangement.notice();
    out["order"] = OrderJson(ord);
    out["relations"] = Json::array();
    for (const auto& rel : relations) {
      out["relations"].push_back(bcc::RelationToJson(rel, bcc::LeadMonomial(rel, ord)));
    }
    out["lead_term_check"] = lead_ok;
    out["lead_term_scope"] = scope;
    out["report"] = bcc::ReportToJson(ot.classification);
    out["explanation"] = ot.explanation;
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  auto& out = std::cout;
  if (!arrangement.notice().empty()) out << "notice: " << arrangement.notice() << "\n";
  out << "hyperplanes " << bcc::FormatSet(m.ground()) << " in dimension " << arrangement.rank()
      << ", order " << OrderText(ord) << "\n";
  for (const auto& rel : relations) {
    out << "  circuit " << bcc::FormatSet(rel.circuit) << ": ";
    for (std::size_t j = 0; j < rel.elements.size(); ++j) {
      out << (j ? " + " : "") << "(" << bcc::FormatRational(rel.coeffs[j]) << ")";
      bcc::ForEachElement(rel.TermMonomial(j), [&](Element e) { out << "x" << e; });
    }
    out << "   lead ";
    bcc::ForEachElement(bcc::LeadMonomial(rel, ord), [&](Element e) { out << "x" << e; });
    out << "\n";
  }
  out << lead_text << (lead_ok ? "all equal the broken circuit monomials" : "MISMATCH")
      << "; " << scope << "\n";
  out << "h-vector " << Vec(ot.classification.h_truncated) << "\n";
  out << ot.explanation << "\n";
  return lead_ok ? kOk : kPropertyFailure;
}

int Construct(const std::string& expr) {
  std::cout << bcc::MatroidToJson(bcc::ParseExpression(expr)).dump(2) << "\n";
  return kOk;
}

int ExitFor(const bcc::Error& e) {
  switch (e.kind()) {
    case bcc::ErrorKind::kSchema:
      return kSchemaError;
    case bcc::ErrorKind::kCapExceeded:
      return kCapError;
    case bcc::ErrorKind::kPrecondition:
      return kPreconditionError;
  }
  return kPreconditionError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Broken circuit complexes of ordered matroids"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "h-vector, panel and classification");
  analyze_cmd->add_option("input", analyze.input, "matroid JSON file or expression")->required();
  analyze_cmd->add_option("--order", analyze.order, "comma-separated order, least first");
  analyze_cmd->add_flag("--all-orders", analyze.all_orders, "test every order (|E| <= 7)");
  analyze_cmd->add_flag("--json", analyze.json, "JSON output");

  std::string decompose_input;
  bool decompose_json = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "parallel connection tree");
  decompose_cmd->add_option("input", decompose_input, "matroid JSON file or expression")
      ->required();
  decompose_cmd->add_flag("--json", decompose_json, "JSON output");

  std::string order_input;
  bool order_json = false;
  auto* order_cmd = app.add_subcommand("order", "synthesize a complete intersection order");
  order_cmd->add_option("input", order_input, "matroid JSON file or expression")->required();
  order_cmd->add_flag("--json", order_json, "JSON output");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the property suite over a corpus");
  verify_cmd->add_option("corpus", verify.corpus, "corpus spec JSON (default corpus if absent)");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads (default: all cores)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--only", verify.only, "run only these check numbers")->delimiter(',');
  verify_cmd->add_flag("--inject-fault", verify.inject_fault, "corrupt one comparison");
  verify_cmd->add_flag("--timing", verify.timing, "include timings");
  verify_cmd->add_flag("--json", verify.json, "JSON output");

  std::string ot_input, ot_order;
  bool ot_json = false;
  auto* ot_cmd = app.add_subcommand("ot", "Orlik-Terao relations and verdict");
  ot_cmd->add_option("matrix", ot_input, "matrix JSON file")->required();
  ot_cmd->add_option("--order", ot_order, "comma-separated order, least first");
  ot_cmd->add_flag("--json", ot_json, "JSON output");

  std::string construct_expr;
  auto* construct_cmd = app.add_subcommand("construct", "print the matroid of an expression");
  construct_cmd->add_option("expression", construct_expr, "construction expression")
      ->required();

  bool show_kernel = false;
  app.add_flag("--kernel-info", show_kernel, "print the active subset kernel to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSchemaError;
  }
  if (show_kernel) {
    std::cerr << "subset kernel: " << bcc::kernels::BackendName(bcc::kernels::ActiveBackend())
              << "\n";
  }

  try {
    if (*analyze_cmd) return Analyze(analyze);
    if (*decompose_cmd) return Decompose(decompose_input, decompose_json);
    if (*order_cmd) return Order(order_input, order_json);
    if (*verify_cmd) return Verify(verify);
    if (*ot_cmd) return Ot(ot_input, ot_order, ot_json);
    if (*construct_cmd) return Construct(construct_expr);
  } catch (const bcc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitFor(e);
  }
  return kOk;
}
