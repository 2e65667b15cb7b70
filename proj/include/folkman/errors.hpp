#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folkman {

// Invalid mathematical input: bad order, malformed pattern, parameter out of range.
class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested object exceeds the fixed 512-vertex capacity.
class CapacityError : public std::length_error {
  using std::length_error::length_error;
};

// A search was refused because it exceeds a configured size threshold.
class RefusalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested Folkman number does not exist (q <= max a_i).
class NonexistenceError : public DomainError {
  using DomainError::DomainError;
};

// Malformed graph6 text; offset points at the offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace folkman
