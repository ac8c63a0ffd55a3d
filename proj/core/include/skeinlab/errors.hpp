#pragma once

#include <stdexcept>
#include <string>

namespace skeinlab {

/// Input that fails schema or structural validation (CLI exit code 2).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A build-failing invariant violation: the computation contradicts an
/// identity the construction is supposed to guarantee (CLI exit code 3).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedPD : ValidationError { using ValidationError::ValidationError; };
struct SchemaError : ValidationError { using ValidationError::ValidationError; };
struct EulerMismatch : ValidationError { using ValidationError::ValidationError; };
struct SelfLoopEdge : ValidationError { using ValidationError::ValidationError; };
struct TrackMismatch : ValidationError { using ValidationError::ValidationError; };
struct RankMismatch : InvariantViolation { using InvariantViolation::InvariantViolation; };
struct CapacityError : ValidationError { using ValidationError::ValidationError; };
struct NotCoprime : ValidationError { using ValidationError::ValidationError; };
struct LengthMismatch : ValidationError { using ValidationError::ValidationError; };
struct ArityMismatch : ValidationError { using ValidationError::ValidationError; };
struct SingularMatrix : ValidationError { using ValidationError::ValidationError; };
struct EvenN : ValidationError { using ValidationError::ValidationError; };
struct ZeroScalar : ValidationError { using ValidationError::ValidationError; };
struct ZeroWeight : ValidationError { using ValidationError::ValidationError; };
struct NormalFormFailure : InvariantViolation { using InvariantViolation::InvariantViolation; };
struct NotScalar : InvariantViolation { using InvariantViolation::InvariantViolation; };
struct ConventionMismatch : InvariantViolation { using InvariantViolation::InvariantViolation; };
struct SearchExhausted : InvariantViolation { using InvariantViolation::InvariantViolation; };
struct UnsupportedCurve : ValidationError { using ValidationError::ValidationError; };
struct NonScalar : InvariantViolation { using InvariantViolation::InvariantViolation; };

}  // namespace skeinlab
