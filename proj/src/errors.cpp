#include "arithgraph/errors.hpp"

namespace arithgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::PrimeNotDividing: return "PrimeNotDividing";
    case ErrorKind::ThresholdExceeded: return "ThresholdExceeded";
    case ErrorKind::NotSolubleAndTooLarge: return "NotSolubleAndTooLarge";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::SelectorUndefined: return "SelectorUndefined";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace arithgraph
