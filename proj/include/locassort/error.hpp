#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locassort {

enum class ErrorKind {
  Parse,           // malformed input text, unknown ids, ragged rows
  Usage,           // invalid arguments or configuration
  SelfLoop,
  DuplicateEdge,
  UnknownNode,
  DegenerateAttribute,
  EmptyMixing,
  Infeasible,
  NonConvergence,
  Disconnected,
};

/// Base exception for every failure raised by the library.
/// `line()` is 1-based and zero when the error is not tied to an input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

  /// Input or usage problems (as opposed to a well-formed input on which the
  /// requested quantity is undefined).
  bool is_input_error() const noexcept {
    switch (kind_) {
      case ErrorKind::Parse:
      case ErrorKind::Usage:
      case ErrorKind::SelfLoop:
      case ErrorKind::DuplicateEdge:
      case ErrorKind::UnknownNode:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

/// Power iteration ran out of iterations; carries the last L1 residual.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double residual)
      : Error(ErrorKind::NonConvergence, what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace locassort
