#ifndef HVECTOR_ERROR_HPP
#define HVECTOR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hvector {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain (bad dimension, bad face, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was hit (face count, chain-counting work).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A flag vector that is not an integer combination of CD-word flag vectors,
// or a keyed polynomial that is not in the image of h.
class SpanError : public Error {
 public:
  using Error::Error;
};

// An internal identity failed (e.g. a non-palindromic h component).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hvector

#endif  // HVECTOR_ERROR_HPP
