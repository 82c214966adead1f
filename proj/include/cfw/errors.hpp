#pragma once

#include <stdexcept>

namespace cfw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on symbols, alphabets, maps, or morphism domains was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A search window was too small for the requested computation.
class WindowError : public Error {
 public:
  using Error::Error;
};

// No anchored Thue-Morse factor exists for the requested length.
class NoAnchorError : public Error {
 public:
  using Error::Error;
};

// The request exceeds the supported exhaustive-search bounds.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfw
