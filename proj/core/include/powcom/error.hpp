#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace powcom {

enum class ErrorKind {
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  NoInverse,
  BadTable,
  ClosureBudgetExceeded,
  OrderCapExceeded,
  NotASubgroup,
  BothZero,
  SyntaxError,
  EmptyInput,
  UnboundVariable,
  BudgetExceeded,
  NotCoprime,
  BadSpec,
  FileError,
  PreconditionFailed,
  PrimeDoesNotDivideOrder,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every library failure surfaces as an Error carrying its kind; the message
// names the offending cell, triple, offset or parameter.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry the byte offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace powcom
