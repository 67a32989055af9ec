#ifndef ITG_ERROR_HPP
#define ITG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace itg {

// Base class for every error raised by the library. The subclasses map
// one-to-one onto the CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed argument: vertex out of range, invalid interval, loop...
class InputError : public Error {
 public:
  using Error::Error;
};

// Contract misuse: duplicate or unknown handle, empty candidate list...
class UsageError : public Error {
 public:
  using Error::Error;
};

// Text instance could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input outside the domain of an algorithm (nonzero delays,
// directed graph given to the zero-delay profile sweep).
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an exact desk-scale routine.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace itg

#endif  // ITG_ERROR_HPP
