#ifndef SPHEREMAP_ERRORS_HPP
#define SPHEREMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spheremap {

/// Base of all library errors that signal a violated contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A denominator evaluated too close to zero.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

/// An operation's stated precondition does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace spheremap

#endif
