#pragma once

#include <stdexcept>
#include <string>

namespace icover {

// Unparseable input text. Carries the 1-based line number of the offense.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A violated internal invariant: a bug in this library, never bad input.
// The CLI maps this to exit code 2.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace icover
