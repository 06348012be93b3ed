#ifndef EXFILGAME_ERRORS_HPP
#define EXFILGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exfilgame {

/// Base class for all library errors. The CLI maps each subclass to a
/// distinct exit code.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed scenario file: bad JSON, unknown field, wrong type.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structurally well-formed input violates a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Equilibrium computation failed (pivot limit, certification, size limit).
class SolverError : public Error {
 public:
  using Error::Error;
};

/// A strategy space exceeded its configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace exfilgame

#endif  // EXFILGAME_ERRORS_HPP
