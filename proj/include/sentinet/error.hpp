#pragma once

#include <stdexcept>
#include <string>

namespace sentinet {

// Bad input from the caller: sizes, parse failures, out-of-domain parameters.
// The CLI maps these to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidSizeError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DimensionError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DomainError : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input was well formed but the computation cannot proceed (enumeration
// guards, non-finite intermediates). The CLI maps these to exit code 3.
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeGuardError : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

class NumericalError : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

}  // namespace sentinet
