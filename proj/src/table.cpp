#include "chg/table.hpp"

#include "chg/error.hpp"

namespace chg {

const char* column_type_name(ColumnType type) {
  switch (type) {
    case ColumnType::Real: return "real";
    case ColumnType::Integer: return "integer";
    case ColumnType::Boolean: return "boolean";
    case ColumnType::Text: return "text";
  }
  return "?";
}

std::optional<std::size_t> Table::column_index(const std::string& column_name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == column_name) return i;
  }
  return std::nullopt;
}

namespace {

bool key_matches(const Value& cell, const Value& key) {
  if (cell.is_numeric() && key.is_numeric()) {
    return cell.numeric() == key.numeric();
  }
  return cell == key;
}

} // namespace

std::optional<Value> Table::lookup(const std::string& key_column, const Value& key,
                                   const std::string& value_column) const {
  auto ki = column_index(key_column);
  if (!ki) raise(Errc::EvalError, "table '" + name + "' has no column '" + key_column + "'");
  auto vi = column_index(value_column);
  if (!vi) raise(Errc::EvalError, "table '" + name + "' has no column '" + value_column + "'");
  for (const auto& row : rows) {
    if (key_matches(row[*ki], key)) return row[*vi];
  }
  return std::nullopt;
}

void TableStore::add(Table table) {
  std::string name = table.name;
  tables_[name] = std::move(table);
}

const Table* TableStore::find(const std::string& name) const {
  auto it = tables_.find(name);
  return it == tables_.end() ? nullptr : &it->second;
}

} // namespace chg
