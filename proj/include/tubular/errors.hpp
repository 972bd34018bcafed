#pragma once

#include <stdexcept>
#include <string>

namespace tubular {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mesh or boundary topology does not have the required structure
/// (wrong loop count, non-manifold boundary, loops not matching curves).
struct StructuralError : Error {
    using Error::Error;
};

/// Input violates a documented precondition or a generator guard.
struct DomainError : Error {
    using Error::Error;
};

/// An iterative solve (chart inversion, disk assignment, log shooting)
/// failed to converge.
struct ConvergenceError : Error {
    using Error::Error;
};

/// File content could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace tubular
