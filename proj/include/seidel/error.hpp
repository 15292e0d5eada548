#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seidel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex argument that is not present in the graph, a self-loop, or an
/// out-of-range endpoint.
class InvalidVertex : public Error {
 public:
  using Error::Error;
};

/// Input beyond a configured size limit (canonical forms, enumeration,
/// graph6 size form).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition on the structure of the input failed (not prime, not a
/// cograph, malformed tree, ...).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Text input that could not be parsed. `offset()` is the byte offset of the
/// first offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace seidel
