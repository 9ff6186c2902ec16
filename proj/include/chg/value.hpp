#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace chg {

class Value;

/// Opaque reference to a named table registered in a TableStore.
struct TableHandle {
  std::string name;
  friend bool operator==(const TableHandle&, const TableHandle&) = default;
};

using Tuple = std::vector<Value>;

enum class ValueKind { Boolean, Integer, Real, Text, TupleKind, TableRef };

/// Tagged datum exchanged between edges: boolean, 64-bit integer, 64-bit
/// real, text, tuple, or table handle. Reals compare bitwise.
class Value {
public:
  Value() : v_(std::int64_t{0}) {}
  Value(bool b) : v_(b) {}
  Value(std::int64_t i) : v_(i) {}
  Value(int i) : v_(std::int64_t{i}) {}
  Value(double d) : v_(d) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(Tuple t) : v_(std::move(t)) {}
  Value(TableHandle h) : v_(std::move(h)) {}

  ValueKind kind() const { return static_cast<ValueKind>(v_.index()); }

  bool is_boolean() const { return kind() == ValueKind::Boolean; }
  bool is_integer() const { return kind() == ValueKind::Integer; }
  bool is_real() const { return kind() == ValueKind::Real; }
  bool is_text() const { return kind() == ValueKind::Text; }
  bool is_tuple() const { return kind() == ValueKind::TupleKind; }
  bool is_table() const { return kind() == ValueKind::TableRef; }
  bool is_numeric() const { return is_integer() || is_real(); }

  bool as_boolean() const { return std::get<bool>(v_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(v_); }
  double as_real() const { return std::get<double>(v_); }
  const std::string& as_text() const { return std::get<std::string>(v_); }
  const Tuple& as_tuple() const { return std::get<Tuple>(v_); }
  const TableHandle& as_table() const { return std::get<TableHandle>(v_); }

  /// Numeric value widened to double; caller checks is_numeric() first.
  double numeric() const { return is_integer() ? static_cast<double>(as_integer()) : as_real(); }

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

private:
  std::variant<bool, std::int64_t, double, std::string, Tuple, TableHandle> v_;
};

const char* kind_name(ValueKind kind);

/// Round-trippable rendering: reals via shortest to_chars (with a forced
/// decimal point), tuples as "(a, b)", tables as "table:name".
std::string to_string(const Value& value);

/// Shortest round-trip formatting for a double, always containing '.' or 'e'.
std::string format_real(double x);

} // namespace chg
