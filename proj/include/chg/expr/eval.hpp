#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "chg/expr/ast.hpp"
#include "chg/expr/builtins.hpp"
#include "chg/table.hpp"
#include "chg/value.hpp"

namespace chg::expr {

/// Everything one evaluation may read. Stochastic builtins draw from a stream
/// keyed by (rng_seed, edge_id, iteration, phase, ordinal), so identical
/// contexts yield identical draws no matter when or how often they run.
struct EvalContext {
  std::map<std::string, Value> bindings;
  std::uint64_t rng_seed = 0;
  std::string edge_id;
  std::int64_t iteration = 0;
  std::uint32_t draw_phase = 1; // 0 while gating viability, 1 for the relation
  const TableStore* tables = nullptr;
  const BuiltinRegistry* registry = nullptr; // defaults to the core set

  const Value& binding(const std::string& name) const;
};

/// Pure function of (ast, ctx): repeated calls agree bitwise, including
/// stochastic draws. Errors: UnboundParameter, TypeMismatch, DivisionByZero,
/// UnknownBuiltin, ArityMismatch, EvalError.
Value evaluate(const Ast& ast, const EvalContext& ctx);

/// Per-evaluation draw state; builtins pull the next keyed ordinal from here.
struct EvalState {
  const EvalContext* ctx = nullptr;
  std::uint32_t next_ordinal = 0;

  double draw_u01();
};

Value evaluate(const Ast& ast, EvalState& state);

} // namespace chg::expr
