#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicmcm {

enum class ErrorKind {
  // charge lattice / betti engine
  ZeroCharge,
  InvalidBundle,
  InvalidDescriptor,
  VariantMismatch,
  Overflow,
  // polynomial core
  ArityMismatch,
  FieldMismatch,
  InvalidField,
  DivisionByZero,
  DimensionMismatch,
  NotSquare,
  NoSolution,
  Inconsistent,
  NotHomogeneous,
  // matrix factorizations
  SingularCubic,
  NotOnCurve,
  OrderThreePoint,
  InflectionPoint,
  DegeneratePoint,
  InhomogeneousInput,
  ZeroPolynomial,
  NotMinimal,
  // documents
  ParseError,
  VerificationFailed,
  // broken invariant inside the library
  InternalError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when parsing text input; carries a 1-based position when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(ErrorKind::ParseError, format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

#define CUBICMCM_ASSERT(cond, msg)                                                          \
  do {                                                                                      \
    if (!(cond)) ::cubicmcm::fail(::cubicmcm::ErrorKind::InternalError, (msg)); \
  } while (0)

}  // namespace cubicmcm
