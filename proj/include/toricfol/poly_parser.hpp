#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricfol/multipoly.hpp"

namespace toricfol {

/// Maps an identifier to a variable index, or nullopt when unknown.
using VarResolver = std::function<std::optional<std::size_t>(std::string_view)>;

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarTable& vars, VarResolver resolve)
      : text_(text), vars_(vars), resolve_(std::move(resolve)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  // expr := term (('+'|'-') term)*
  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      skip_ws();
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }
  // term := unary (('*' unary) | ('/' constant-unary))*
  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        auto c = unary().as_constant();
        if (!c || c->is_zero()) fail("division only by a nonzero constant");
        acc = acc.scaled(c->inverse());
      } else {
        return acc;
      }
    }
  }
  MultiPoly unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  MultiPoly power() {
    MultiPoly base = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      auto digits = read_digits();
      if (digits.empty()) fail("expected a nonnegative integer exponent");
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }
  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      auto digits = read_digits();
      return MultiPoly::constant(vars_, Rational(BigInt(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto idx = resolve_(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      return MultiPoly::variable(vars_, *idx);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const VarTable& vars_;
  VarResolver resolve_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline VarResolver table_resolver(const VarTable& vars) {
  return [&vars](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    return std::nullopt;
  };
}

/// Parses a polynomial over `vars`. Accepts signed sums of products of
/// integer literals, variables and powers (`3*z1^2 - 1/2*z2`), plus
/// parentheses; `/` is allowed only by a constant.
inline MultiPoly parse_polynomial(std::string_view text, const VarTable& vars) {
  return detail::PolyParser(text, vars, table_resolver(vars)).parse();
}

inline MultiPoly parse_polynomial(std::string_view text, const VarTable& vars, VarResolver resolve) {
  return detail::PolyParser(text, vars, std::move(resolve)).parse();
}

/// Splits a comma-separated list, ignoring commas nested in parentheses.
inline std::vector<std::string> split_top_level(std::string_view text, char sep = ',') {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace toricfol
