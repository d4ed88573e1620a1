#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "reesgor/error.hpp"
#include "reesgor/polynomial.hpp"

namespace reesgor {

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

namespace detail {

/// Recursive-descent parser for polynomial expressions over `+ - * ^`,
/// integer constants, variable names and parentheses.
template <class F>
class ExprParser {
 public:
  ExprParser(const SpacePtr<F>& ring, std::string_view text, int line, int col0)
      : ring_(ring), s_(text), line_(line), col0_(col0) {}

  Poly<F> parse() {
    Poly<F> p = expr();
    skip();
    if (pos_ < s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(line_, col0_ + static_cast<int>(pos_), msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<F> expr() {
    Poly<F> acc = Poly<F>::zero(ring_);
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      else if (eat('+')) neg = false;
      else if (!first) break;
      Poly<F> t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Poly<F> term() {
    Poly<F> acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Poly<F> factor() {
    Poly<F> base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 0xFFFF) error("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly<F> primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<F> p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 18) {
        pos_ = start;
        error("integer constant too large");
      }
      return Poly<F>::constant(ring_, ring_->field().from_int(std::stoll(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& names = ring_->names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return Poly<F>::variable(ring_, static_cast<int>(i));
      pos_ = start;
      error("unknown variable '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  SpacePtr<F> ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_, col0_;
};

}  // namespace detail

/// Parses a polynomial in the variables of `ring`. `line` and `column` locate
/// the text inside a larger document for error messages.
template <class F>
Poly<F> parse_poly(const SpacePtr<F>& ring, std::string_view text, int line = 1, int column = 1) {
  return detail::ExprParser<F>(ring, text, line, column).parse();
}

}  // namespace reesgor
