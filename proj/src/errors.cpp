#include "grassmann/errors.hpp"

namespace grassmann {

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::Syntax:
      return "syntax";
    case ParseErrorKind::EmptyMonomial:
      return "empty-monomial";
    case ParseErrorKind::IndexOutOfRange:
      return "index-out-of-range";
    case ParseErrorKind::DuplicateIndex:
      return "duplicate-index";
    case ParseErrorKind::ZeroDenominator:
      return "zero-denominator";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
    : Error("parse error (" + std::string(grassmann::to_string(kind)) + ") at offset " +
            std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position),
      message_(message) {}

}  // namespace grassmann
