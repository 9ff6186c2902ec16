#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "chg/value.hpp"

namespace chg::expr {

struct ExprNode;
using Ast = std::shared_ptr<const ExprNode>;

enum class ExprKind { Literal, ParamRef, UnaryOp, BinaryOp, Call, Conditional };

/// Immutable expression tree. `if(c, a, b)` parses to Conditional so only the
/// taken branch is evaluated; `and`/`or` short-circuit in the evaluator.
struct ExprNode {
  ExprKind kind;

  Value literal;                 // Literal
  std::string name;              // ParamRef ident, op symbol, Call name
  std::vector<Ast> children;     // operands / call args / (test, then, else)

  static Ast make_literal(Value v);
  static Ast make_param(std::string name);
  static Ast make_unary(std::string op, Ast operand);
  static Ast make_binary(std::string op, Ast lhs, Ast rhs);
  static Ast make_call(std::string name, std::vector<Ast> args);
  static Ast make_conditional(Ast test, Ast then_branch, Ast else_branch);
};

bool ast_equal(const Ast& a, const Ast& b);

/// Parameter names referenced anywhere in the tree (excludes the reserved
/// `__iteration__` identifier, which the evaluator supplies itself).
std::set<std::string> free_parameters(const Ast& ast);

/// Render with minimal parentheses; the result reparses to an equal tree.
std::string to_string(const Ast& ast);

/// Parse per the engine grammar; errors carry position and expectation.
Ast parse_expression(const std::string& source);

} // namespace chg::expr
