#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfree {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text. offset is a byte position into the parsed text.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (byte " + std::to_string(offset) + ")"),
        message(msg),
        offset(offset) {}
  std::string message;
  std::size_t offset;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct Unsupported : Error {
  using Error::Error;
};

struct Timeout : Error {
  explicit Timeout(const std::string& what)
      : Error("time limit exceeded in " + what) {}
};

}  // namespace gfree
