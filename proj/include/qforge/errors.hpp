#pragma once

#include <stdexcept>

namespace qforge {

// Malformed or invariant-violating graph/embedding document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A document's declared genus disagrees with the traced embedding.
class GenusMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qforge
