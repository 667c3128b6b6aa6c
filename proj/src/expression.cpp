// Copyright 2026 The slhkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slhkit/expression.hpp"

#include <cctype>

namespace slh::expr {

Expr Expr::leaf(std::string name) {
  return Expr(std::make_shared<const Node>(Node{Op::leaf, std::move(name), {}}));
}

Expr Expr::series(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{Op::series, {}, {std::move(lhs), std::move(rhs)}}));
}

Expr Expr::concat(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{Op::concat, {}, {std::move(lhs), std::move(rhs)}}));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.op() != b.op()) return false;
  if (a.op() == Op::leaf) return a.name() == b.name();
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

namespace {

enum class Tok { name, series, concat, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  Expr parse() {
    Expr e = expr();
    if (tok_.kind != Tok::end) fail("unexpected token '" + tok_.text + "'");
    return e;
  }

 private:
  Expr expr() {
    Expr e = term();
    while (tok_.kind == Tok::series) {
      advance();
      e = Expr::series(std::move(e), term());
    }
    return e;
  }

  Expr term() {
    Expr e = atom();
    while (tok_.kind == Tok::concat) {
      advance();
      e = Expr::concat(std::move(e), atom());
    }
    return e;
  }

  Expr atom() {
    if (tok_.kind == Tok::name) {
      Expr e = Expr::leaf(tok_.text);
      advance();
      return e;
    }
    if (tok_.kind == Tok::lparen) {
      advance();
      Expr e = expr();
      if (tok_.kind != Tok::rparen) fail("expected ')'");
      advance();
      return e;
    }
    fail(tok_.kind == Tok::end ? "unexpected end of expression" : "expected a name or '('");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tok_.offset); }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == src_.size()) {
      tok_ = {Tok::end, start, "<end>"};
      return;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      tok_ = {Tok::name, start, std::string(src_.substr(start, pos_ - start))};
      return;
    }
    if (src_.substr(pos_, 2) == "<|") {
      pos_ += 2;
      tok_ = {Tok::series, start, "<|"};
      return;
    }
    if (src_.substr(pos_, 3) == "(+)") {
      pos_ += 3;
      tok_ = {Tok::concat, start, "(+)"};
      return;
    }
    if (c == '(' || c == ')') {
      ++pos_;
      tok_ = {c == '(' ? Tok::lparen : Tok::rparen, start, std::string(1, c)};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{Tok::end, 0, {}};
};

int precedence(Op op) { return op == Op::series ? 1 : op == Op::concat ? 2 : 3; }

void print(const Expr& e, std::string& out) {
  if (e.op() == Op::leaf) {
    out += e.name();
    return;
  }
  const int p = precedence(e.op());
  auto child = [&](const Expr& c, bool right) {
    // Left-associative: a right child of equal precedence needs parentheses.
    const int cp = precedence(c.op());
    const bool paren = cp < p || (right && cp == p);
    if (paren) out += '(';
    print(c, out);
    if (paren) out += ')';
  };
  child(e.lhs(), false);
  out += e.op() == Op::series ? " <| " : " (+) ";
  child(e.rhs(), true);
}

void collect(const Expr& e, std::vector<std::string>& out) {
  if (e.op() == Op::leaf) {
    out.push_back(e.name());
    return;
  }
  collect(e.lhs(), out);
  collect(e.rhs(), out);
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string pretty_print(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::vector<std::string> leaves(const Expr& e) {
  std::vector<std::string> out;
  collect(e, out);
  return out;
}

std::vector<Expr> series_operands(const Expr& e) {
  if (e.op() != Op::series) return {e};
  std::vector<Expr> out = series_operands(e.lhs());
  std::vector<Expr> right = series_operands(e.rhs());
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

}  // namespace slh::expr
