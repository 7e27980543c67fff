#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A decider was handed a graph that fails validation (sinks, duplicate edges).
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

// An exploration exceeded one of the configured caps. `flag()` is the CLI
// flag that raises it.
class ResourceError : public Error {
 public:
  ResourceError(std::string flag, std::size_t limit)
      : Error("resource cap exceeded: " + flag + "=" + std::to_string(limit)),
        flag_(std::move(flag)),
        limit_(limit) {}

  const std::string& flag() const { return flag_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string flag_;
  std::size_t limit_;
};

// A quantity whose defining formula has no meaning for the given input.
class UndefinedError : public Error {
 public:
  using Error::Error;
};

// A set escaped the working family of a symbolic session.
class FamilyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgs
