#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgt {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text. `offset` is the byte position of the offending
// character when the input has one (word text); the offset-free form is
// for inputs where a byte position means nothing (flag values, specs).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  explicit ParseError(const std::string& what) : Error(what), offset_(0) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A computation was refused because it would exceed a configured resource
// cap (enumeration bit cap, group-closure element cap, search cap).
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

}  // namespace fgt
