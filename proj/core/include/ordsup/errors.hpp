#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordsup {

// Malformed input string (group spec, cycle notation, ...). Carries the byte
// offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A construction would exceed the element cap or a graph size limit.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& message)
      : std::runtime_error(message) {}
};

// Chordless-cycle enumeration would emit more cycles than the caller's
// limit. Recoverable: callers fall back to the quotient representation.
class CycleLimitError : public std::runtime_error {
 public:
  explicit CycleLimitError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace ordsup
