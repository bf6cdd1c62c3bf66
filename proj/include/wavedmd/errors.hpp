#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wavedmd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments, malformed files, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed line in an edge-list stream. `line()` is 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Overflow, degenerate spectra, failed decompositions.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wavedmd
