#include "chg/value.hpp"

#include <bit>
#include <charconv>

namespace chg {

bool operator==(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_real()) {
    // Bitwise, so NaN == NaN and 0.0 != -0.0. Tolerance is opt-in per
    // operation, never implicit.
    return std::bit_cast<std::uint64_t>(a.as_real()) == std::bit_cast<std::uint64_t>(b.as_real());
  }
  return a.v_ == b.v_;
}

const char* kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::Boolean: return "boolean";
    case ValueKind::Integer: return "integer";
    case ValueKind::Real: return "real";
    case ValueKind::Text: return "text";
    case ValueKind::TupleKind: return "tuple";
    case ValueKind::TableRef: return "table";
  }
  return "?";
}

std::string format_real(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, res.ptr);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string to_string(const Value& value) {
  switch (value.kind()) {
    case ValueKind::Boolean: return value.as_boolean() ? "true" : "false";
    case ValueKind::Integer: return std::to_string(value.as_integer());
    case ValueKind::Real: return format_real(value.as_real());
    case ValueKind::Text: return value.as_text();
    case ValueKind::TableRef: return "table:" + value.as_table().name;
    case ValueKind::TupleKind: {
      std::string out = "(";
      const Tuple& items = value.as_tuple();
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(items[i]);
      }
      out += ")";
      return out;
    }
  }
  return "?";
}

} // namespace chg
