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

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "slhkit/error.hpp"

namespace slh::expr {

enum class Op { leaf, series, concat };

/// Immutable composition AST. `A <| B` is series(A, B), i.e. A downstream of
/// B; `A (+) B` is concat(A, B).
class Expr {
 public:
  static Expr leaf(std::string name);
  static Expr series(Expr lhs, Expr rhs);
  static Expr concat(Expr lhs, Expr rhs);

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const Expr& lhs() const { return node_->children[0]; }
  const Expr& rhs() const { return node_->children[1]; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// expr := term { "<|" term } ; term := atom { "(+)" atom } ;
/// atom := NAME | "(" expr ")".
/// Throws ParseError carrying the byte offset of the offending token.
Expr parse_expression(std::string_view text);

/// Canonical text with the fewest parentheses that re-parse to the same tree.
std::string pretty_print(const Expr& e);

/// Leaf names in left-to-right order (with repeats).
std::vector<std::string> leaves(const Expr& e);

/// Flattens nested series nodes into their operands, leftmost (most
/// downstream) first. Series is associative, so nesting is irrelevant.
std::vector<Expr> series_operands(const Expr& e);

/// Folds the tree bottom-up.
template <typename T, typename Resolve, typename Series, typename Concat>
T evaluate(const Expr& e, Resolve&& resolve, Series&& series, Concat&& concat) {
  switch (e.op()) {
    case Op::leaf:
      return resolve(e.name());
    case Op::series:
      return series(evaluate<T>(e.lhs(), resolve, series, concat),
                    evaluate<T>(e.rhs(), resolve, series, concat));
    case Op::concat:
      return concat(evaluate<T>(e.lhs(), resolve, series, concat),
                    evaluate<T>(e.rhs(), resolve, series, concat));
  }
  throw Error("evaluate: corrupt expression");
}

}  // namespace slh::expr
