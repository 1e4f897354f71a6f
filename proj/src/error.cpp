#include "arspec/error.hpp"

namespace arspec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::Parity: return "parity";
    case ErrorKind::Role: return "role";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::SingularArgument: return "singular-argument";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::SolverFailure: return "solver-failure";
    case ErrorKind::Symmetry: return "symmetry";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::NotEquitable: return "not-equitable";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::UnsupportedSize: return "unsupported-size";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace arspec
