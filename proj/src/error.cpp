#include "svfa/error.hpp"

namespace svfa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInterval: return "MalformedInterval";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DomainBoundedAbove: return "DomainBoundedAbove";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::IsolatedPoint: return "IsolatedPoint";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::InvalidUniverse: return "InvalidUniverse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NoAnalyticDerivative: return "NoAnalyticDerivative";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace svfa
