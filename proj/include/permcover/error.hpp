#pragma once

#include <stdexcept>
#include <string>

namespace permcover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad input: degree mismatch, malformed permutation, out-of-range parameter.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// The requested computation exceeds a configured feasibility cap, or the
/// caller must fall back to a search because no construction applies.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

/// An internal certificate failed to check (e.g. a witness that is not exposed).
class VerificationError : public Error {
public:
  using Error::Error;
};

/// A floating-point evaluation landed too close to an integer boundary to
/// round reliably.
class BoundaryError : public Error {
public:
  using Error::Error;
};

} // namespace permcover
