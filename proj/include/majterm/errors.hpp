#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace majterm {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text. `position` is a byte offset for term syntax and a
// 1-based line number for algebra files.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position(position) {}
  std::size_t position;
};

// Unknown operation symbol, arity mismatch or unassigned variable met while
// evaluating a term.
struct EvalError : Error {
  using Error::Error;
};

// A parameter precondition does not hold (m out of range, divisibility, ...).
struct ParamError : Error {
  using Error::Error;
};

// A generated set would exceed the configured cap.
struct ClosureOverflow : Error {
  ClosureOverflow(const std::string& what, std::size_t cap)
      : Error(what), cap(cap) {}
  std::size_t cap;
};

}  // namespace majterm
