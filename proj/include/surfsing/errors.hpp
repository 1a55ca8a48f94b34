#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfsing {

/// Malformed user input: bad file syntax, unknown identifiers, out-of-range
/// arguments. The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure with a 1-based source line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input is well formed but violates a mathematical precondition of the
/// requested operation (e.g. a discrepancy outside (-1, 0]).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result that the theory guarantees cannot happen did happen.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace surfsing
