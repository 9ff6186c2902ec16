#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>

#include "chg/value.hpp"

namespace chg::expr {

struct EvalState;

/// Builtin body; stochastic ones pull keyed draws through the eval state.
using BuiltinFn = std::function<Value(std::span<const Value>, EvalState&)>;

struct Builtin {
  std::string name;
  int arity = 0; // negative = variadic
  BuiltinFn fn;
};

class BuiltinRegistry {
public:
  /// Registers a builtin; DuplicateBuiltin if the name is taken.
  void register_builtin(std::string name, int arity, BuiltinFn fn);

  bool contains(const std::string& name) const { return entries_.count(name) > 0; }
  const Builtin* find(const std::string& name) const;

  /// Core set: abs, min, max, floor, mod, clamp, if, eq/ne/lt/le/gt/ge,
  /// and/or/not, bernoulli, uniform, lookup — plus tuple helpers
  /// (tuple, element, size).
  static BuiltinRegistry core();

private:
  std::map<std::string, Builtin> entries_;
};

/// Shared immutable core registry used when a context names no other.
const BuiltinRegistry& default_core_registry();

} // namespace chg::expr
