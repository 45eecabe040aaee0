#ifndef COAMAP_ERRORS_HPP
#define COAMAP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coamap {

// Malformed or semantically invalid input (bad polynomial text, rank
// deficiencies, precondition violations callers can fix).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in polynomial text; `position` is a byte offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : InputError(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// The request is valid but outside the supported feature set
// (float-mode enumeration, vertex queries in high codimension, ...).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace coamap

#endif
