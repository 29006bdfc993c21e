#ifndef GRASSMANN_ERRORS_HPP
#define GRASSMANN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grassmann {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient algebras (different n or field).
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined for its input (e.g. leading monomial of 0).
class UndefinedInput : public Error {
 public:
  using Error::Error;
};

/// Bad field descriptor, characteristic 2, or arithmetic across fields.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Construction-time validation failure (e.g. images that do not anticommute).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node budget before proving optimality.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t best_so_far)
      : Error(what), best_so_far_(best_so_far) {}
  std::size_t best_so_far() const noexcept { return best_so_far_; }

 private:
  std::size_t best_so_far_;
};

enum class ParseErrorKind {
  Syntax,
  EmptyMonomial,
  IndexOutOfRange,
  DuplicateIndex,
  ZeroDenominator,
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& message);

  ParseErrorKind kind() const noexcept { return kind_; }
  /// Zero-based byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }
  /// The message without the kind/offset prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
  std::string message_;
};

}  // namespace grassmann

#endif  // GRASSMANN_ERRORS_HPP
