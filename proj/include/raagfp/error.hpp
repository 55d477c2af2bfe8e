#pragma once

#include <stdexcept>
#include <string>

namespace raagfp {

// Malformed input: bad JSON shape, unknown vertex, self-loop, non-prime p.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The character is identically zero, so it is not an epimorphism onto Z_p
// even after p-power rescaling.
class NotEpimorphismError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The defining matrix has rational rank 0: G/N is finite.
class FiniteQuotientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition (e.g. index m not a
// multiple of the vertex orders).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace raagfp
