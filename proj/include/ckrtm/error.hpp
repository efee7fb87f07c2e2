#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ckrtm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed forest, word, polynomial or index text. `offset()` is the byte
/// position of the first offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An argument lies outside the subspace a map is defined on (e.g. L_y^{-1}
/// applied to a word not starting with y).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Requested degree or sweep bound exceeds the configured cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ckrtm
