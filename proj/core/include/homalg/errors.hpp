#pragma once

#include <stdexcept>
#include <string>

namespace homalg {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

// Multiplicative reduction is only supported for torsion-free cohomology.
class TorsionError : public Error {
 public:
  using Error::Error;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

// A span was expected to be closed under a product or the differential.
class ClosureError : public Error {
 public:
  using Error::Error;
};

}  // namespace homalg
