#pragma once

// Recursive-descent parser for rational expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' ['-'] INTEGER)?
//   primary := INTEGER | IDENTIFIER | '(' expr ')'
//
// Identifiers are [A-Za-z_][A-Za-z0-9_]* and must be declared in the symbol
// table. A rational literal is written as a quotient of integers, e.g. 3/4.
// Exponents must be integer literals; -x^2 parses as -(x^2).

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "kenmotsu/expr.hpp"

namespace kenmotsu {

class ParseError : public SymbolicError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : SymbolicError(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, SymbolTablePtr symbols) : text_(text), symbols_(std::move(symbols)) {}

  Expr parse() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Expr e = expression();
    skip_space();
    if (pos_ < text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  Expr expression() {
    Expr lhs = term();
    while (true) {
      skip_space();
      if (accept('+')) {
        lhs += term();
      } else if (accept('-')) {
        lhs -= term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    while (true) {
      skip_space();
      if (accept('*')) {
        lhs *= unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        Expr rhs = unary();
        if (rhs.is_zero()) throw ParseError("division by zero", at);
        lhs /= rhs;
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    skip_space();
    if (peek() != '^') return base;
    const std::size_t at = pos_;
    ++pos_;
    skip_space();
    bool negative = accept('-');
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("exponent must be an integer literal", pos_);
    }
    Integer k = integer();
    if (!k.fits_sint_p() || k > 1000) throw ParseError("exponent too large", at);
    int e = static_cast<int>(k.get_si());
    if (negative) {
      if (base.is_zero()) throw ParseError("division by zero", at);
      e = -e;
    }
    return base.pow(e);
  }

  Expr primary() {
    skip_space();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = expression();
      skip_space();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      if (!symbols_ || !symbols_->find(name)) throw ParseError("unknown identifier '" + name + "'", at);
      return Expr::symbol(symbols_, name);
    }
    if (c == '\0') throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  Integer integer() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
    }
    return Integer(digits);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  SymbolTablePtr symbols_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text, const SymbolTablePtr& symbols) {
  Expr e = detail::ExprParser(text, symbols).parse();
  return symbols ? e.with_table(symbols) : e;
}

}  // namespace kenmotsu
