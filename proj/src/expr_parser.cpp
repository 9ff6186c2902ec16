#include <charconv>
#include <cstdlib>

#include "chg/error.hpp"
#include "chg/expr/ast.hpp"
#include "chg/expr/token.hpp"

namespace chg::expr {

namespace {

// Recursive descent over:
//   expr := or ; or := and { "or" and } ; and := cmp { "and" cmp }
//   cmp  := add [ ("=="|"!="|"<"|"<="|">"|">=") add ]
//   add  := mul { ("+"|"-") mul } ; mul := unary { ("*"|"/"|"%") unary }
//   unary := ("not"|"-") unary | pow ; pow := atom [ "^" unary ]
//   atom := number | "true" | "false" | string | ident | ident "(" [args] ")" | "(" expr ")"
class Parser {
public:
  explicit Parser(const std::string& source) : source_(source), tokens_(tokenize(source)) {}

  Ast run() {
    Ast e = parse_or();
    if (!at_end()) fail("end of input");
    return e;
  }

private:
  const std::string& source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    static const Token end_token{TokenKind::End, "", 0};
    return at_end() ? end_token : tokens_[pos_];
  }

  [[noreturn]] void fail(const std::string& expected) {
    std::size_t offset = at_end() ? source_.size() : tokens_[pos_].position;
    std::string got = at_end() ? "end of input" : "'" + tokens_[pos_].text + "'";
    raise(Errc::ParseError,
          "expected " + expected + ", got " + got + " at offset " + std::to_string(offset));
  }

  bool accept(TokenKind kind, const std::string& text) {
    if (!at_end() && tokens_[pos_].kind == kind && tokens_[pos_].text == text) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_op(const std::string& text) { return accept(TokenKind::Operator, text); }

  void expect(TokenKind kind, const std::string& text) {
    if (!accept(kind, text)) fail("'" + text + "'");
  }

  Ast parse_or() {
    Ast lhs = parse_and();
    while (accept(TokenKind::Keyword, "or")) lhs = ExprNode::make_binary("or", lhs, parse_and());
    return lhs;
  }

  Ast parse_and() {
    Ast lhs = parse_cmp();
    while (accept(TokenKind::Keyword, "and")) lhs = ExprNode::make_binary("and", lhs, parse_cmp());
    return lhs;
  }

  Ast parse_cmp() {
    Ast lhs = parse_add();
    for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
      if (accept_op(op)) return ExprNode::make_binary(op, lhs, parse_add());
    }
    return lhs;
  }

  Ast parse_add() {
    Ast lhs = parse_mul();
    while (true) {
      if (accept_op("+")) lhs = ExprNode::make_binary("+", lhs, parse_mul());
      else if (accept_op("-")) lhs = ExprNode::make_binary("-", lhs, parse_mul());
      else return lhs;
    }
  }

  Ast parse_mul() {
    Ast lhs = parse_unary();
    while (true) {
      if (accept_op("*")) lhs = ExprNode::make_binary("*", lhs, parse_unary());
      else if (accept_op("/")) lhs = ExprNode::make_binary("/", lhs, parse_unary());
      else if (accept_op("%")) lhs = ExprNode::make_binary("%", lhs, parse_unary());
      else return lhs;
    }
  }

  Ast parse_unary() {
    if (accept(TokenKind::Keyword, "not")) return ExprNode::make_unary("not", parse_unary());
    if (accept_op("-")) return ExprNode::make_unary("-", parse_unary());
    return parse_pow();
  }

  Ast parse_pow() {
    Ast base = parse_atom();
    if (accept_op("^")) return ExprNode::make_binary("^", base, parse_unary());
    return base;
  }

  Ast parse_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Number: {
        ++pos_;
        return ExprNode::make_literal(parse_number(tok));
      }
      case TokenKind::String: {
        ++pos_;
        return ExprNode::make_literal(Value(unescape(tok)));
      }
      case TokenKind::Keyword: {
        if (tok.text == "true") { ++pos_; return ExprNode::make_literal(Value(true)); }
        if (tok.text == "false") { ++pos_; return ExprNode::make_literal(Value(false)); }
        fail("a value");
      }
      case TokenKind::Identifier: {
        ++pos_;
        if (accept(TokenKind::Punctuation, "(")) return parse_call(tok.text);
        return ExprNode::make_param(tok.text);
      }
      case TokenKind::Punctuation: {
        if (tok.text == "(") {
          ++pos_;
          Ast inner = parse_or();
          expect(TokenKind::Punctuation, ")");
          return inner;
        }
        fail("a value");
      }
      default: fail("a value");
    }
  }

  Ast parse_call(const std::string& name) {
    std::vector<Ast> args;
    if (!accept(TokenKind::Punctuation, ")")) {
      args.push_back(parse_or());
      while (accept(TokenKind::Punctuation, ",")) args.push_back(parse_or());
      expect(TokenKind::Punctuation, ")");
    }
    if (name == "if") {
      if (args.size() != 3) {
        raise(Errc::ArityMismatch, "if() takes 3 arguments, got " + std::to_string(args.size()));
      }
      return ExprNode::make_conditional(args[0], args[1], args[2]);
    }
    return ExprNode::make_call(name, std::move(args));
  }

  Value parse_number(const Token& tok) {
    bool real = tok.text.find('.') != std::string::npos || tok.text.find('e') != std::string::npos ||
                tok.text.find('E') != std::string::npos;
    if (real) {
      return Value(std::strtod(tok.text.c_str(), nullptr));
    }
    std::int64_t v = 0;
    auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (res.ec != std::errc{}) {
      raise(Errc::ParseError, "integer literal out of range at offset " + std::to_string(tok.position));
    }
    return Value(v);
  }

  std::string unescape(const Token& tok) {
    std::string out;
    for (std::size_t i = 1; i + 1 < tok.text.size(); ++i) {
      char c = tok.text[i];
      if (c == '\\') {
        char next = tok.text[++i]; // lexer guarantees a following char
        switch (next) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '\\': out += '\\'; break;
          case '"': out += '"'; break;
          default:
            raise(Errc::ParseError,
                  std::string("unknown escape '\\") + next + "' at offset " + std::to_string(tok.position));
        }
      } else {
        out += c;
      }
    }
    return out;
  }
};

int precedence_of(const ExprNode& node) {
  // or=1 and=2 cmp=3 add=4 mul=5 unary=6 pow=7 atom=8
  switch (node.kind) {
    case ExprKind::BinaryOp: {
      const std::string& op = node.name;
      if (op == "or") return 1;
      if (op == "and") return 2;
      if (op == "==" || op == "!=" || op == "<" || op == "<=" || op == ">" || op == ">=") return 3;
      if (op == "+" || op == "-") return 4;
      if (op == "*" || op == "/" || op == "%") return 5;
      return 7; // ^
    }
    case ExprKind::UnaryOp: return 6;
    default: return 8;
  }
}

std::string escape_text(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

void print_node(const Ast& ast, int min_precedence, std::string& out) {
  const ExprNode& n = *ast;
  int prec = precedence_of(n);
  bool parens = prec < min_precedence;
  if (parens) out += '(';
  switch (n.kind) {
    case ExprKind::Literal: {
      const Value& v = n.literal;
      if (v.is_text()) out += escape_text(v.as_text());
      else out += chg::to_string(v);
      break;
    }
    case ExprKind::ParamRef: out += n.name; break;
    case ExprKind::UnaryOp:
      out += n.name == "not" ? "not " : "-";
      print_node(n.children[0], 6, out);
      break;
    case ExprKind::BinaryOp: {
      if (n.name == "^") {
        print_node(n.children[0], 8, out); // base must be an atom
        out += " ^ ";
        print_node(n.children[1], 6, out); // exponent is a unary
      } else if (prec == 3) {
        // comparisons don't chain; parenthesize nested comparisons on both sides
        print_node(n.children[0], 4, out);
        out += " " + n.name + " ";
        print_node(n.children[1], 4, out);
      } else {
        print_node(n.children[0], prec, out);
        out += " " + n.name + " ";
        print_node(n.children[1], prec + 1, out);
      }
      break;
    }
    case ExprKind::Call: {
      out += n.name + "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += ", ";
        print_node(n.children[i], 1, out);
      }
      out += ')';
      break;
    }
    case ExprKind::Conditional: {
      out += "if(";
      print_node(n.children[0], 1, out);
      out += ", ";
      print_node(n.children[1], 1, out);
      out += ", ";
      print_node(n.children[2], 1, out);
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

} // namespace

Ast parse_expression(const std::string& source) { return Parser(source).run(); }

std::string to_string(const Ast& ast) {
  std::string out;
  print_node(ast, 1, out);
  return out;
}

} // namespace chg::expr
