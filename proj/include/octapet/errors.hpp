#pragma once

#include <stdexcept>
#include <string>

namespace octapet {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A point landed on (or a computation required crossing) a set where the
/// dynamics are undefined: piece boundaries, non-unique lattice reductions,
/// the fixed singular parameter of the renormalization map, and so on.
struct BoundaryError : Error {
    explicit BoundaryError(const std::string& what) : Error(what) {}
};

/// A checked 64-bit integer operation would have overflowed.  Exact code must
/// fail loudly rather than wrap.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

/// Malformed geometric input: non-convex polygon, degenerate polytope,
/// vertex data that fails an integrality requirement, etc.
struct GeometryError : Error {
    explicit GeometryError(const std::string& what) : Error(what) {}
};

/// An iteration guard tripped (orbit did not close up within its step budget).
struct IterationLimitError : Error {
    explicit IterationLimitError(const std::string& what) : Error(what) {}
};

/// A verification procedure failed: the object does not satisfy the property
/// it was claimed to satisfy.  Used by partition/calculation verifiers when a
/// structural precondition fails mid-computation.
struct VerificationError : Error {
    explicit VerificationError(const std::string& what) : Error(what) {}
};

}  // namespace octapet
