#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chg::expr {

enum class TokenKind { Number, Identifier, Operator, Punctuation, Keyword, String, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;        // exact source slice
  std::size_t position = 0; // byte offset into the source
};

/// Lossless token stream (token texts plus original whitespace reproduce the
/// input). Unknown characters raise LexError with the byte offset.
std::vector<Token> tokenize(const std::string& source);

} // namespace chg::expr
