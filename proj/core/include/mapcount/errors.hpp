#pragma once

#include <stdexcept>

namespace mapcount {

// One exception type per failure mode so callers can catch precisely.

// Exact division left a nonzero remainder (polynomial division, or a z^-k
// shift applied to a series whose low-order coefficients are not all zero).
struct NonzeroRemainder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sqrt_series needs a constant term that is the square of a rational.
struct NotASquareConstant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// alpha is not a fixed-point-free involution.
struct NotInvolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The half-edge structure is not connected.
struct NotConnected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Euler characteristic V - E + F differs from 2.
struct NotPlanar : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A face valency outside the supported range (root face or inner face of
// valency 1 where a pure polygon of valency >= 2 is required).
struct UnsupportedValency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A coefficient that counts something, and so must be an integer, came out
// non-integral.
struct NonIntegerCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Neither root of the singular quadratic matches the required limit.
struct BranchSelectionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A singular expansion is too short for the requested asymptotics.
struct InsufficientOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration size beyond the supported range was requested.
struct SizeLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed map file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mapcount
