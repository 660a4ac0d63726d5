#include "powcom/error.hpp"

#include <cstdlib>
#include <string>

#include "powcom/limits.hpp"

namespace powcom {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::FileError: return "FileError";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : Error(ErrorKind::SyntaxError, message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

template <class T>
void read_env(const char* name, T& target) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (end != nullptr && *end == '\0' && value > 0) target = static_cast<T>(value);
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  read_env("POWCOM_ELEMENT_CAP", limits.element_cap);
  read_env("POWCOM_LATTICE_CAP", limits.lattice_cap);
  read_env("POWCOM_ENUMERATION_CAP", limits.enumeration_cap);
  read_env("POWCOM_LAW_BUDGET", limits.law_budget);
  return limits;
}

}  // namespace powcom
