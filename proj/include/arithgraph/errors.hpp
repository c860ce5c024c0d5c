#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arithgraph {

enum class ErrorKind {
  BudgetExceeded,
  DegreeMismatch,
  NotAMember,
  NotNormal,
  PrimeNotDividing,
  ThresholdExceeded,
  NotSolubleAndTooLarge,
  NotFound,
  SelectorUndefined,
  InvalidSpec,
  ParseError,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every library failure; `kind()` selects the
/// contract-level error named by the operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arithgraph
