#pragma once

#include <stdexcept>
#include <string>

namespace tamari {

// Raised when an argument violates an operation's precondition. The message
// starts with the name of the violated condition (NotExceptional,
// NotAnInterval, SizeMismatch, ...), which the CLI forwards verbatim.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& condition, const std::string& detail)
      : std::invalid_argument(condition + ": " + detail), condition_(condition) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what)
      : std::runtime_error("ParseError: " + what) {}
};

}  // namespace tamari
