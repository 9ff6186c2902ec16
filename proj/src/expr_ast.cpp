#include "chg/expr/ast.hpp"

namespace chg::expr {

Ast ExprNode::make_literal(Value v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Literal;
  n->literal = std::move(v);
  return n;
}

Ast ExprNode::make_param(std::string name) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::ParamRef;
  n->name = std::move(name);
  return n;
}

Ast ExprNode::make_unary(std::string op, Ast operand) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::UnaryOp;
  n->name = std::move(op);
  n->children = {std::move(operand)};
  return n;
}

Ast ExprNode::make_binary(std::string op, Ast lhs, Ast rhs) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::BinaryOp;
  n->name = std::move(op);
  n->children = {std::move(lhs), std::move(rhs)};
  return n;
}

Ast ExprNode::make_call(std::string name, std::vector<Ast> args) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Call;
  n->name = std::move(name);
  n->children = std::move(args);
  return n;
}

Ast ExprNode::make_conditional(Ast test, Ast then_branch, Ast else_branch) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Conditional;
  n->children = {std::move(test), std::move(then_branch), std::move(else_branch)};
  return n;
}

bool ast_equal(const Ast& a, const Ast& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  if (a->kind == ExprKind::Literal && !(a->literal == b->literal)) return false;
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    if (!ast_equal(a->children[i], b->children[i])) return false;
  }
  return true;
}

namespace {

void collect_params(const Ast& ast, std::set<std::string>& out) {
  if (!ast) return;
  if (ast->kind == ExprKind::ParamRef && ast->name != "__iteration__") out.insert(ast->name);
  for (const auto& child : ast->children) collect_params(child, out);
}

} // namespace

std::set<std::string> free_parameters(const Ast& ast) {
  std::set<std::string> out;
  collect_params(ast, out);
  return out;
}

} // namespace chg::expr
