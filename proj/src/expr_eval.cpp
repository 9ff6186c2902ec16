#include "chg/expr/eval.hpp"

#include <cmath>

#include "chg/error.hpp"
#include "chg/rng.hpp"

namespace chg::expr {

const Value& EvalContext::binding(const std::string& name) const {
  auto it = bindings.find(name);
  if (it == bindings.end()) raise(Errc::UnboundParameter, "parameter '" + name + "' is not bound");
  return it->second;
}

double EvalState::draw_u01() {
  DrawKey key{ctx->rng_seed, ctx->edge_id, ctx->iteration, ctx->draw_phase, next_ordinal++};
  return chg::draw_u01(key);
}

namespace {

[[noreturn]] void type_error(const std::string& what, const Value& v) {
  raise(Errc::TypeMismatch, what + " (got " + kind_name(v.kind()) + " " + chg::to_string(v) + ")");
}

double require_numeric(const Value& v, const char* where) {
  if (!v.is_numeric()) type_error(std::string(where) + " needs a number", v);
  return v.numeric();
}

bool require_boolean(const Value& v, const char* where) {
  if (!v.is_boolean()) type_error(std::string(where) + " needs a boolean", v);
  return v.as_boolean();
}

Value check_finite(double x) {
  if (!std::isfinite(x)) raise(Errc::EvalError, "non-finite result");
  return Value(x);
}

Value arith(const std::string& op, const Value& a, const Value& b) {
  if (!a.is_numeric()) type_error("'" + op + "' needs numbers", a);
  if (!b.is_numeric()) type_error("'" + op + "' needs numbers", b);
  if (op == "^") {
    return check_finite(std::pow(a.numeric(), b.numeric()));
  }
  if (a.is_integer() && b.is_integer()) {
    std::int64_t x = a.as_integer(), y = b.as_integer();
    if (op == "+") return Value(x + y);
    if (op == "-") return Value(x - y);
    if (op == "*") return Value(x * y);
    if (y == 0) raise(Errc::DivisionByZero, "'" + op + "' by zero");
    if (op == "/") return Value(x / y);
    return Value(x % y);
  }
  double x = a.numeric(), y = b.numeric();
  if (op == "+") return check_finite(x + y);
  if (op == "-") return check_finite(x - y);
  if (op == "*") return check_finite(x * y);
  if (y == 0.0) raise(Errc::DivisionByZero, "'" + op + "' by zero");
  if (op == "/") return check_finite(x / y);
  return check_finite(std::fmod(x, y));
}

Value compare(const std::string& op, const Value& a, const Value& b) {
  if (op == "==" || op == "!=") {
    bool eq;
    if (a.is_numeric() && b.is_numeric()) eq = a.numeric() == b.numeric();
    else if (a.kind() != b.kind()) type_error("'" + op + "' on mismatched kinds", b);
    else eq = a == b;
    return Value(op == "==" ? eq : !eq);
  }
  int sign;
  if (a.is_numeric() && b.is_numeric()) {
    double x = a.numeric(), y = b.numeric();
    sign = x < y ? -1 : (x > y ? 1 : 0);
  } else if (a.is_text() && b.is_text()) {
    int c = a.as_text().compare(b.as_text());
    sign = c < 0 ? -1 : (c > 0 ? 1 : 0);
  } else {
    type_error("'" + op + "' needs two numbers or two texts", a.is_numeric() || a.is_text() ? b : a);
  }
  if (op == "<") return Value(sign < 0);
  if (op == "<=") return Value(sign <= 0);
  if (op == ">") return Value(sign > 0);
  return Value(sign >= 0);
}

Value eval_node(const Ast& ast, EvalState& state) {
  const ExprNode& n = *ast;
  switch (n.kind) {
    case ExprKind::Literal: return n.literal;
    case ExprKind::ParamRef: {
      if (n.name == "__iteration__") return Value(state.ctx->iteration);
      return state.ctx->binding(n.name);
    }
    case ExprKind::UnaryOp: {
      if (n.name == "not") return Value(!require_boolean(eval_node(n.children[0], state), "'not'"));
      Value v = eval_node(n.children[0], state);
      if (v.is_integer()) return Value(-v.as_integer());
      if (v.is_real()) return Value(-v.as_real());
      type_error("unary '-' needs a number", v);
    }
    case ExprKind::BinaryOp: {
      const std::string& op = n.name;
      if (op == "and" || op == "or") {
        bool lhs = require_boolean(eval_node(n.children[0], state), "'and'/'or'");
        if (op == "and" && !lhs) return Value(false);
        if (op == "or" && lhs) return Value(true);
        return Value(require_boolean(eval_node(n.children[1], state), "'and'/'or'"));
      }
      Value a = eval_node(n.children[0], state);
      Value b = eval_node(n.children[1], state);
      if (op == "==" || op == "!=" || op == "<" || op == "<=" || op == ">" || op == ">=") {
        return compare(op, a, b);
      }
      return arith(op, a, b);
    }
    case ExprKind::Conditional: {
      bool test = require_boolean(eval_node(n.children[0], state), "if()");
      return eval_node(n.children[test ? 1 : 2], state);
    }
    case ExprKind::Call: {
      const BuiltinRegistry& reg = state.ctx->registry ? *state.ctx->registry : default_core_registry();
      const Builtin* builtin = reg.find(n.name);
      if (!builtin) raise(Errc::UnknownBuiltin, "no builtin named '" + n.name + "'");
      if (builtin->arity >= 0 && static_cast<std::size_t>(builtin->arity) != n.children.size()) {
        raise(Errc::ArityMismatch, n.name + "() takes " + std::to_string(builtin->arity) +
                                       " arguments, got " + std::to_string(n.children.size()));
      }
      std::vector<Value> args;
      args.reserve(n.children.size());
      for (const auto& child : n.children) args.push_back(eval_node(child, state));
      return builtin->fn(args, *state.ctx);
    }
  }
  raise(Errc::EvalError, "corrupt expression node");
}

} // namespace

const BuiltinRegistry& default_core_registry() {
  static const BuiltinRegistry reg = BuiltinRegistry::core();
  return reg;
}

Value evaluate(const Ast& ast, EvalState& state) { return eval_node(ast, state); }

Value evaluate(const Ast& ast, const EvalContext& ctx) {
  EvalState state{&ctx, 0};
  return eval_node(ast, state);
}

} // namespace chg::expr
