#pragma once

#include <stdexcept>
#include <string>

namespace golomb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition (coprimality, primality, ...).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic would leave the supported 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of room before finding what it was looking for.
class NotFoundWithinBound : public Error {
 public:
  using Error::Error;
};

/// A constructed witness lies beyond the requested window.
class WindowExceeded : public NotFoundWithinBound {
 public:
  using NotFoundWithinBound::NotFoundWithinBound;
};

/// A window check contradicted the expected inclusion; the input map is not
/// what the caller claimed it to be.
class WindowViolation : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

/// A polynomial leaves the positive integers on the checked window.
class NotSelfMap : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

/// The queried number already belongs to the set whose complement was asked for.
class MemberInput : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

/// Some h(a^n) is not a power of h(a).
class NoExponent : public Error {
 public:
  using Error::Error;
};

/// A proven invariant failed at runtime. Always a bug.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionViolation(message);
}

}  // namespace golomb
