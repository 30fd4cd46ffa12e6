#pragma once

#include <stdexcept>
#include <string>

namespace psilab {

/// Base class for every failure reported by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument lies inside a pole guard band (Γ at non-positive integers, ψ_z and ζ at z = 1).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain where an operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A summation would need more terms than the configured cap.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// Panel refinement could not reach the requested tolerance.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

/// Grid spacing incompatible with a unit translation.
class GridMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace psilab
