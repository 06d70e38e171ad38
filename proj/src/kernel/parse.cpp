#include "ratlines/kernel/parse.hpp"

#include <cctype>

#include "ratlines/kernel/error.hpp"

namespace ratlines {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  MPoly run() {
    MPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                what + " at column " + std::to_string(pos_ + 1) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MPoly expr() {
    MPoly acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+') acc += term();
      else acc -= term();
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      MPoly rhs = unary();
      if (c == '*') {
        acc = acc * rhs;
      } else {
        if (!rhs.is_constant() || rhs.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / rhs.constant_value();
      }
    }
    return acc;
  }

  MPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      if (e > 4096) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly(Rational(Integer(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      for (int i = 0; i < kNumVars; ++i)
        if (var_name(var_at(i)) == name) return MPoly::variable(var_at(i));
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const std::string& text) { return Parser(text).run(); }

}  // namespace ratlines
