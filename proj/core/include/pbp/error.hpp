#ifndef PBP_ERROR_HPP_
#define PBP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pbp {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Malformed or out-of-contract input (unknown generator, bad JSON, ...).
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  /// Input whose asserted facts contradict each other.
  class InconsistentInput : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
  };

  /// A relator of a presentation does not map to the identity.
  class RelatorNotKilled : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
  };

  /// Structure constants violating antisymmetry or the Jacobi identity.
  class InvalidAlgebra : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
  };

  /// A Baumslag-Solitar parameter is zero.
  class ZeroParameter : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
  };

  /// A catalogue entry was requested with unsupported parameters.
  class UnsupportedParams : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
  };

  /// A self-check of a computed result failed. Always a bug.
  class VerificationFailure : public Error {
   public:
    using Error::Error;
  };

  /// A configured resource bound (cosets, refinement depth, ...) was hit.
  class BoundExceeded : public Error {
   public:
    using Error::Error;
  };

  /// Interval refinement could not certify a sign.
  class PrecisionExhausted : public BoundExceeded {
   public:
    using BoundExceeded::BoundExceeded;
  };

}  // namespace pbp

#endif  // PBP_ERROR_HPP_
