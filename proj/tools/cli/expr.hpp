#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dimfree/types.hpp"

namespace dimfree::cli {

// Infix matrix expressions. Binary operators are words (ltimes, rtimes,
// circ, dk, pstp, badd, bsub, hadd, hsub) or the classical + - *. There is no
// precedence: a chain evaluates left to right and may use one operator only,
// so "A dk B hadd C" is rejected until parenthesized.
//
//   expr    := unary (OP unary)*
//   unary   := '-' unary | postfix
//   postfix := primary "'"*
//   primary := NUMBER | NAME | NAME '(' expr {',' expr} ')' | '(' expr ')'
//
// Functions: box(E), sym(E), alt(E), proj(n, E), bridge(n, p), eye(n).
struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum class Kind { Number, Name, Call, Binary, Negate, Transpose };
  Kind kind;
  std::size_t column = 0;  // 1-based
  std::string text;        // name, function or operator
  double number = 0.0;
  std::vector<NodePtr> args;
};

// Throws ParseError carrying the column of the offending token.
NodePtr parse_expression(const std::string& src);

struct EvalOptions {
  bool weighted = true;
};

using Bindings = std::map<std::string, Mat>;

Mat evaluate(const Node& node, const Bindings& env, const EvalOptions& opt = {});
Mat evaluate(const std::string& src, const Bindings& env, const EvalOptions& opt = {});

// Names referenced by the expression, in first-use order.
std::vector<std::string> free_names(const Node& node);

}  // namespace dimfree::cli
