#pragma once

#include <stdexcept>
#include <string>

namespace arspec {

enum class ErrorKind {
  InvalidOrder,
  Parity,
  Role,
  Domain,
  SingularArgument,
  IndexOutOfRange,
  SolverFailure,
  Symmetry,
  Convergence,
  NotEquitable,
  Consistency,
  Disconnected,
  UnsupportedSize,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Root search failed inside a bracket; carries the 1-based bracket index.
class SolverFailure : public Error {
 public:
  SolverFailure(int bracket, const std::string& what)
      : Error(ErrorKind::SolverFailure, what), bracket_(bracket) {}

  int bracket() const noexcept { return bracket_; }

 private:
  int bracket_;
};

}  // namespace arspec
