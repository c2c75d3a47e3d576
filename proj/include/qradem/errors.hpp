#pragma once

#include <stdexcept>
#include <string>

namespace qradem {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operator or channel dimensions do not match / are not a power of two.
struct DimensionError : Error {
    using Error::Error;
};

/// Input operator fails the Hermiticity tolerance.
struct HermiticityError : Error {
    using Error::Error;
};

/// Scalar parameter outside its documented domain.
struct ParameterError : Error {
    using Error::Error;
};

/// Computation would exceed a hard desk-scale cap.
struct ResourceCapError : Error {
    using Error::Error;
};

/// Enumeration requested on a class containing parameterized slots.
struct UnsupportedEnumeration : Error {
    using Error::Error;
};

/// A check's stated precondition does not hold; message carries the evidence.
struct PreconditionError : Error {
    using Error::Error;
};

/// Channel transfer matrix is singular; no recovery map exists.
struct SingularChannelError : Error {
    using Error::Error;
};

/// Linear program is unbounded below.
struct UnboundedError : Error {
    using Error::Error;
};

/// Numerical breakdown inside the simplex solver.
struct SolverError : Error {
    using Error::Error;
};

/// Experiment configuration failed validation; names the offending field.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace qradem
