#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace causal_implicits {

/// Base class for every error caused by bad user input (malformed files,
/// unknown names, violated preconditions). The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph text that cannot be parsed. Carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Cycles, hidden variables with parents, duplicate or unknown names.
class StructuralError : public InputError {
 public:
  using InputError::InputError;
};

/// An operation was called outside its domain (e.g. a closed form whose
/// graphical precondition does not hold).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A polynomial references a parameter that no supplied table provides.
class MissingParameterError : public InputError {
 public:
  using InputError::InputError;
};

/// The Groebner engine hit its configured resource budget. Never accompanied
/// by a partial result.
class IntractableError : public std::runtime_error {
 public:
  enum class Reason { max_pairs, max_degree, max_seconds };

  IntractableError(Reason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

}  // namespace causal_implicits
