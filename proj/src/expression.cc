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

#include "bcckit/expression.h"

#include <cctype>
#include <map>
#include <optional>

#include "bcckit/constructions.h"
#include "bcckit/error.h"
#include "bcckit/json_io.h"

namespace bcc {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Matroid Parse() {
    Matroid m = Expr();
    SkipSpace();
    if (pos_ != text_.size()) Error("trailing input");
    return m;
  }

 private:
  [[noreturn]] void Error(const std::string& what) const {
    Fail(ErrorKind::kSchema, "expression: " + what + " at offset " +
                                 std::to_string(pos_) + " in \"" + text_ +
                                 "\"");
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      Error(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string Word() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  int Number() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_ || pos_ - start > 6) Error("expected a number");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  std::string Path() {
    SkipSpace();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size() && (text_[pos_] != ')' || depth > 0)) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')') --depth;
      ++pos_;
    }
    std::string path = text_.substr(start, pos_ - start);
    while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) {
      path.pop_back();
    }
    if (path.empty()) Error("expected a file name");
    return path;
  }

  Matroid Expr() {
    const std::string head = Word();
    if (head == "U") {
      Expect('(');
      const int m = Number();
      Expect(',');
      const int n = Number();
      Expect(')');
      CheckGroundCap(n);
      if (m > n) Fail(ErrorKind::kPrecondition, "U(m,n) needs m <= n");
      return Matroid::Uniform(m, n);
    }
    if (head == "G") {
      Expect('(');
      const std::string path = Path();
      Expect(')');
      return MatroidFromJson(LoadJsonFile(path));
    }
    if (head == "sum") {
      Expect('(');
      Matroid left = Expr();
      Expect(',');
      Matroid right = Expr();
      Expect(')');
      return DirectSum(left, Align(left, right, std::nullopt));
    }
    if (head == "P" || head == "S") {
      Expect('(');
      Matroid left = Expr();
      Expect(',');
      Matroid right = Expr();
      Expect(';');
      const Element e = Number();
      Expect(')');
      if (!Contains(left.ground(), e)) {
        Fail(ErrorKind::kPrecondition,
             "basepoint " + std::to_string(e) + " is not in the left operand");
      }
      ConnectionSpec spec{left, Align(left, right, e), e};
      return head == "P" ? ParallelConnection(spec) : SeriesConnection(spec);
    }
    Error(head.empty() ? "expected an expression" : "unknown form " + head);
  }

  static Matroid Align(const Matroid& left, const Matroid& right,
                       std::optional<Element> glue) {
    const ElementSet want = glue ? Singleton(*glue) : 0;
    if ((left.ground() & right.ground()) == want) return right;
    if (right.size() == 0) return right;
    std::map<Element, Element> map;
    Element next = left.size() == 0 ? 1 : MaxElement(left.ground()) + 1;
    Element glued = -1;
    if (glue) {
      glued = Contains(right.ground(), *glue) ? *glue : MinElement(right.ground());
      map[glued] = *glue;
    }
    for (Element x : Elements(right.ground())) {
      if (x != glued) map[x] = next++;
    }
    if (next - 1 > kMaxElementId) {
      Fail(ErrorKind::kCapExceeded, "element ids exceed " +
                                        std::to_string(kMaxElementId));
    }
    return Relabel(right, map);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Matroid ParseExpression(const std::string& text) { return Parser(text).Parse(); }

}  // namespace bcc
