#pragma once

#include <stdexcept>
#include <string>

namespace crank {

// Raised by the text-format parsers (ordinals, words, clopens, DSL,
// automaton files). `position` is a byte offset into the input, or the
// line number for line-based formats (see `is_line`).
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, std::size_t position, bool is_line = false)
      : std::runtime_error(std::move(msg)), position(position), is_line(is_line) {}

  std::size_t position;
  bool is_line;
};

// Raised when an operation's precondition is violated (non-limit ordinal
// fed to a fundamental sequence, rank query on the wrong rank class, ...).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

} // namespace crank
