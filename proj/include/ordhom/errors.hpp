#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordhom {

/// Raised when an enumeration would exceed its configured size limit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed poset input (JSON file, cyclic cover list, ...).
class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a poset expression; `position` is a 0-based offset into the text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ordhom
