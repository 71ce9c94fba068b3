#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grasscoh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tuple that is not non-increasing was used where a partition is expected.
class InvalidPartition : public Error {
 public:
  using Error::Error;
};

/// Bundle expression syntax error; `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Sym^j / Wedge^j with j < 0, or Wedge^j above the rank with no rule to fall back on.
class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A symmetric or exterior power outside the hardcoded catalog.
class UnsupportedPlethysm : public Error {
 public:
  using Error::Error;
};

/// A runtime assertion on the mathematics failed (scan windows, beta_0 rule, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace grasscoh
