#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tucker {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed matrix text. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised by the brute-force oracle when an instance exceeds its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// A certified result failed its own certificate check. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tucker
