#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace svfa {

enum class ErrorKind {
  MalformedInterval,
  OutOfDomain,
  DomainBoundedAbove,
  DomainMismatch,
  IsolatedPoint,
  UniverseMismatch,
  InvalidUniverse,
  InvalidArgument,
  BadIndex,
  NoAnalyticDerivative,
  ShapeMismatch,
  UnsupportedKind,
  UnknownTheorem,
  ParseError,
  UnknownCommand,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the scenario runner in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace svfa
