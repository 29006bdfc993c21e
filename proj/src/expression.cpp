#include "grassmann/expression.hpp"

#include <cctype>
#include <string>

#include "grassmann/errors.hpp"
#include "grassmann/text.hpp"

namespace grassmann {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int n, Field field) : text_(text), n_(n), field_(field) {}

  Element parse() {
    Element value = expression();
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseErrorKind::Syntax, pos_, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Element expression() {
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = text_[pos_++] == '-';
    Element value = product();
    if (negative) value = -value;
    skip_space();
    while (peek() == '+' || peek() == '-') {
      const bool minus = text_[pos_++] == '-';
      Element rhs = product();
      value = minus ? value - rhs : value + rhs;
      skip_space();
    }
    return value;
  }

  Element product() {
    Element value = factor();
    skip_space();
    while (peek() == '*') {
      ++pos_;
      value = value * factor();
      skip_space();
    }
    return value;
  }

  Element factor() {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      Element inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    // A single coefficient or monomial token, delegated to the element grammar.
    const auto start = pos_;
    if (peek() == 'v') {
      while (!at_end() && peek() != '}') ++pos_;
      if (at_end()) fail("unterminated monomial");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const auto save = pos_;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      } else {
        pos_ = save;
      }
    } else {
      fail("expected '(', a coefficient or a monomial");
    }
    try {
      return parse_element(text_.substr(start, pos_ - start), n_, field_);
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), start + e.position(), e.message());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  Field field_;
};

}  // namespace

Element evaluate_expression(std::string_view text, int n, Field field) {
  check_generator_count(n);
  return ExpressionParser(text, n, field).parse();
}

}  // namespace grassmann
