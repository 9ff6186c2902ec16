#include "chg/expr/token.hpp"

#include <cctype>

#include "chg/error.hpp"

namespace chg::expr {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_part(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

bool is_keyword(const std::string& word) {
  return word == "and" || word == "or" || word == "not" || word == "true" || word == "false";
}

} // namespace

std::vector<Token> tokenize(const std::string& source) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = source.size();
  while (i < n) {
    char c = source[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_digit(c)) {
      while (i < n && is_digit(source[i])) ++i;
      if (i < n && source[i] == '.') {
        ++i;
        while (i < n && is_digit(source[i])) ++i;
      }
      if (i < n && (source[i] == 'e' || source[i] == 'E')) {
        std::size_t mark = i;
        ++i;
        if (i < n && (source[i] == '+' || source[i] == '-')) ++i;
        if (i < n && is_digit(source[i])) {
          while (i < n && is_digit(source[i])) ++i;
        } else {
          i = mark; // "2e" without digits: leave 'e' for the next token
        }
      }
      out.push_back({TokenKind::Number, source.substr(start, i - start), start});
      continue;
    }
    if (is_ident_start(c)) {
      while (i < n && is_ident_part(source[i])) ++i;
      std::string word = source.substr(start, i - start);
      out.push_back({is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, std::move(word), start});
      continue;
    }
    if (c == '"') {
      ++i;
      while (i < n && source[i] != '"') {
        if (source[i] == '\\') {
          if (i + 1 >= n) raise(Errc::LexError, "unterminated escape at offset " + std::to_string(i));
          i += 2;
        } else {
          ++i;
        }
      }
      if (i >= n) raise(Errc::LexError, "unterminated string at offset " + std::to_string(start));
      ++i; // closing quote
      out.push_back({TokenKind::String, source.substr(start, i - start), start});
      continue;
    }
    if (c == '(' || c == ')' || c == ',') {
      out.push_back({TokenKind::Punctuation, std::string(1, c), start});
      ++i;
      continue;
    }
    // operators: == != <= >= < > + - * / % ^
    if (c == '=' || c == '!' || c == '<' || c == '>') {
      if ((c == '=' || c == '!') && (i + 1 >= n || source[i + 1] != '=')) {
        raise(Errc::LexError, std::string("unexpected character '") + c + "' at offset " + std::to_string(start));
      }
      std::size_t len = (i + 1 < n && source[i + 1] == '=') ? 2 : 1;
      out.push_back({TokenKind::Operator, source.substr(start, len), start});
      i += len;
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '%' || c == '^') {
      out.push_back({TokenKind::Operator, std::string(1, c), start});
      ++i;
      continue;
    }
    raise(Errc::LexError, std::string("unexpected character '") + c + "' at offset " + std::to_string(start));
  }
  return out;
}

} // namespace chg::expr
