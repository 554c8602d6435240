#pragma once

#include <stdexcept>

namespace liecp {

/// Base class for all errors raised by this library. The command line tool
/// maps these to exit code 1; anything else (including std::logic_error from
/// internal consistency checks) indicates a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root-system family/rank combination outside the supported range.
struct UnsupportedType : Error { using Error::Error; };

/// An operation that requires a nonzero vector received the zero vector.
struct ZeroVector : Error { using Error::Error; };

/// A coordinate-change result was required to be integral but is not.
struct NonIntegral : Error { using Error::Error; };

/// Simple-root or matrix index outside the valid range.
struct IndexOutOfRange : Error { using Error::Error; };

/// A highest weight was required to be dominant (all coordinates >= 0).
struct NotDominant : Error { using Error::Error; };

/// The input weight multiset is not the character of any finite-dimensional
/// representation.
struct NotACharacter : Error { using Error::Error; };

/// Two operands belong to different root systems.
struct TagMismatch : Error { using Error::Error; };

/// A configurable work cap (polynomial degree, representation dimension)
/// would be exceeded.
struct CapExceeded : Error { using Error::Error; };

/// A matrix-size cap would be exceeded (symbolic determinants grow fast).
struct SizeCapExceeded : Error { using Error::Error; };

/// The base-change matrix B must be invertible but is singular.
struct SingularB : Error { using Error::Error; };

/// A root class (long/short) that does not exist for the given root system.
struct NoSuchRootClass : Error { using Error::Error; };

/// Matrix dimensions do not match what the operation requires.
struct ShapeError : Error { using Error::Error; };

/// Malformed textual input (rational literals, weight lists, ...).
struct ParseError : Error { using Error::Error; };

}  // namespace liecp
