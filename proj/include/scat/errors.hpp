#pragma once

#include <stdexcept>
#include <string>

namespace scat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input, configuration, or file content.  CLI exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

/// Solver, quadrature, or convergence failure.  CLI exit code 3.
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace scat
