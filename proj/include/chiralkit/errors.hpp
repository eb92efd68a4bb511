#pragma once

#include <stdexcept>
#include <string>

namespace chiralkit {

/// A region whose lightcone projection is not a single open interval.
class DisconnectedProjection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SourceTargetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pushforward would leave the piecewise-polynomial class (a Mobius piece meets a
/// non-constant part of the support).
class NonPolynomialPushforward : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EmptyIntersection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace chiralkit
