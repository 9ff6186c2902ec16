#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chg/value.hpp"

namespace chg {

enum class ColumnType { Real, Integer, Boolean, Text };

const char* column_type_name(ColumnType type);

struct Column {
  std::string name;
  ColumnType type = ColumnType::Text;
  friend bool operator==(const Column&, const Column&) = default;
};

/// Rectangular, immutable value table; lookups match keys by exact equality.
struct Table {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Value>> rows;

  std::optional<std::size_t> column_index(const std::string& column_name) const;

  /// First row whose key column equals `key` (integers and reals compare
  /// numerically); returns the value column's cell, or nullopt if no row
  /// matches. Throws EvalError for unknown columns.
  std::optional<Value> lookup(const std::string& key_column, const Value& key,
                              const std::string& value_column) const;
};

/// Named tables resolvable from table-handle values during evaluation.
class TableStore {
public:
  void add(Table table);
  bool contains(const std::string& name) const { return tables_.count(name) > 0; }
  const Table* find(const std::string& name) const;

private:
  std::map<std::string, Table> tables_;
};

} // namespace chg
